#include "remoteness/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rem {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image sequence is not a bijection on {0,...," +
                                  std::to_string(n - 1) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::standard_cycle(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % degree;
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::string& text) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && (text.compare(pos, 2, "id") == 0)) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing input after 'id': '" + text + "'");
    return Perm(std::move(img));
  }
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation at '" + text.substr(pos) + "'");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point number in cycle notation at '" + text.substr(pos) + "'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v >= degree)
        throw std::invalid_argument("point " + std::to_string(v) + " out of range for degree " +
                                    std::to_string(degree));
      cycle.push_back(v);
      skip_ws();
    }
    if (pos == text.size()) throw std::invalid_argument("unterminated cycle in '" + text + "'");
    ++pos;  // ')'
    any = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (img[static_cast<std::size_t>(from)] != from)
        throw std::invalid_argument("point " + std::to_string(from) + " appears in two cycles");
      img[static_cast<std::size_t>(from)] = to;
    }
    skip_ws();
  }
  if (!any && text.find('(') == std::string::npos && !text.empty() &&
      text.find_first_not_of(" \t") != std::string::npos)
    throw std::invalid_argument("cannot parse cycle notation: '" + text + "'");
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text, std::optional<int> degree) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty permutation string");
  if (text[first] == '(' || text.compare(first, 2, "id") == 0) {
    if (!degree)
      throw std::invalid_argument("cycle notation needs an explicit degree: '" + text + "'");
    return from_cycles(*degree, text);
  }
  std::vector<int> img;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
      img.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse image value '" + tok + "' in '" + text + "'");
    }
  }
  Perm p{std::move(img)};
  if (degree && p.degree() != *degree)
    throw std::invalid_argument("permutation '" + text + "' has degree " +
                                std::to_string(p.degree()) + ", expected " + std::to_string(*degree));
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& then) const {
  if (degree() != then.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[i] = then.images_[static_cast<std::size_t>(images_[i])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(img));
}

Perm Perm::power(long long exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Perm acc = identity(degree());
  while (e > 0) {
    if (e & 1ULL) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1ULL;
  }
  return acc;
}

std::string Perm::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string Perm::cycle_str() const {
  const auto cs = cycle_structure(*this);
  if (cs.cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

int hamming_distance(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in hamming_distance");
  int d = 0;
  for (int i = 0; i < a.degree(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

std::vector<int> CycleStructure::lengths() const {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

int CycleStructure::support_size() const {
  int s = 0;
  for (const auto& c : cycles) s += static_cast<int>(c.size());
  return s;
}

CycleStructure cycle_structure(const Perm& p) {
  const int n = p.degree();
  CycleStructure cs;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    if (p[start] == start) {
      seen[static_cast<std::size_t>(start)] = true;
      cs.fixed_points.push_back(start);
      continue;
    }
    std::vector<int> cyc;
    int cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      cyc.push_back(cur);
      cur = p[cur];
    } while (cur != start);
    cs.cycles.push_back(std::move(cyc));
  }
  return cs;
}

Parity parity(const Perm& p) {
  const auto cs = cycle_structure(p);
  int transpositions = 0;
  for (const auto& c : cs.cycles) transpositions += static_cast<int>(c.size()) - 1;
  return (transpositions % 2 == 0) ? Parity::even : Parity::odd;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace rem
