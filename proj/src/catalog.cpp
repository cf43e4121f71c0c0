#include "remoteness/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "remoteness/parallel.hpp"

namespace rem {

std::string default_catalog_path() {
#ifdef REMOTENESS_CATALOG_FILE
  std::ifstream probe(REMOTENESS_CATALOG_FILE);
  if (probe.good()) return REMOTENESS_CATALOG_FILE;
#endif
  return "data/transitive_groups.txt";
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

CatalogEntry parse_header(const std::string& line) {
  const auto close = line.find(']');
  if (line.empty() || line[0] != '[' || close == std::string::npos)
    throw std::runtime_error("malformed catalog header: " + line);
  CatalogEntry e;
  std::istringstream in(line.substr(1, close - 1));
  std::string kv;
  while (in >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::runtime_error("malformed key=value: " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "n")
      e.degree = std::stoi(val);
    else if (key == "idx")
      e.index = std::stoi(val);
    else if (key == "order")
      e.order = std::stoll(val);
    else if (key == "note")
      e.note = val;
    else if (key == "expected")
      e.expected_remoteness = std::stoi(val);
    else
      throw std::runtime_error("unknown catalog key: " + key);
  }
  e.provenance = trim(line.substr(close + 1));
  if (e.degree < 1 || e.order < 1)
    throw std::runtime_error("catalog header missing degree or order: " + line);
  return e;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog data file: " + path);

  std::vector<CatalogEntry> entries;
  CatalogEntry current;
  bool open = false;
  std::string line;
  auto flush = [&] {
    if (!open) return;
    if (current.generators.empty())
      throw std::runtime_error("catalog entry " + current.label() + " has no generators");
    entries.push_back(std::move(current));
    current = CatalogEntry{};
    open = false;
  };

  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t[0] == '[') {
      flush();
      current = parse_header(t);
      open = true;
    } else {
      if (!open) throw std::runtime_error("generator line outside an entry: " + t);
      current.generators.push_back(Perm::from_cycles(current.degree, t));
    }
  }
  flush();

  for (const auto& e : entries) {
    PermutationGroup G(e.degree, e.generators);
    if (static_cast<long long>(G.order()) != e.order)
      throw std::runtime_error("catalog entry " + e.label() + " has order " +
                               std::to_string(G.order()) + ", expected " + std::to_string(e.order));
    if (!G.is_transitive())
      throw std::runtime_error("catalog entry " + e.label() + " is not transitive");
    if (e.expected_remoteness != e.degree - 1 && e.expected_remoteness != e.degree)
      throw std::runtime_error("catalog entry " + e.label() + " expects remoteness outside {n-1, n}");
  }
  return entries;
}

TableReport verify_table(const std::vector<CatalogEntry>& entries, unsigned jobs) {
  TableReport report;
  report.rows.resize(entries.size());

  const unsigned workers = resolve_jobs(jobs);
  run_workers(workers, [&](unsigned w) {
    for (std::size_t i = w; i < entries.size(); i += workers) {
      const auto& e = entries[i];
      PermutationGroup G(e.degree, e.generators);
      const auto res = transitive_remoteness(G);
      TableRow row;
      row.entry = e;
      row.computed = res.value;
      row.method = res.method;
      row.witness = res.witness;
      row.ok = res.value == e.expected_remoteness;
      report.rows[i] = std::move(row);
    }
  });

  report.all_ok = true;
  for (const auto& row : report.rows) {
    if (!row.ok) report.all_ok = false;
    if (row.entry.degree == 6) {
      ++report.degree6_groups;
      if (row.computed == 5) report.degree6_none_at_n_minus_1 = false;
    }
  }
  return report;
}

std::string TableReport::text() const {
  std::ostringstream out;
  out << "label    order  expected computed method                   note                     ok\n";
  for (const auto& row : rows) {
    std::ostringstream label;
    label << row.entry.label();
    out << label.str();
    for (std::size_t i = label.str().size(); i < 9; ++i) out << ' ';
    std::string order = std::to_string(row.entry.order);
    out << order;
    for (std::size_t i = order.size(); i < 7; ++i) out << ' ';
    std::string exp = std::to_string(row.entry.expected_remoteness);
    out << exp;
    for (std::size_t i = exp.size(); i < 9; ++i) out << ' ';
    std::string comp = std::to_string(row.computed);
    out << comp;
    for (std::size_t i = comp.size(); i < 9; ++i) out << ' ';
    out << row.method;
    for (std::size_t i = row.method.size(); i < 25; ++i) out << ' ';
    out << row.entry.note;
    for (std::size_t i = row.entry.note.size(); i < 25; ++i) out << ' ';
    out << (row.ok ? "yes" : "NO") << '\n';
  }
  out << (all_ok ? "all rows match" : "MISMATCH PRESENT") << "; degree-6 groups checked: "
      << degree6_groups << (degree6_none_at_n_minus_1 ? " (none at n-1)" : " (UNEXPECTED n-1)")
      << '\n';
  return out.str();
}

}  // namespace rem
