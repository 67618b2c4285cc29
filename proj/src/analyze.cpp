#include "stagedtrees/analyze.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "stagedtrees/errors.hpp"
#include "stagedtrees/ideal.hpp"

namespace stagedtrees {

bool ScreenReport::passes() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.holds; });
}

nlohmann::json ScreenReport::to_json() const {
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& c : conditions) {
    conds.push_back({{"name", c.name}, {"holds", c.holds}, {"diagnostics", c.diagnostics}});
  }
  return {{"n", n}, {"d", d}, {"degree", degree}, {"passes", passes()}, {"conditions", std::move(conds)}};
}

namespace {

ConditionResult size_bounds(const Polynomial& f, std::size_t n, std::size_t d, std::size_t deg) {
  ConditionResult r{"size_bounds", true, {}};
  if (f.is_one()) return r;
  auto fail = [&](std::string msg) {
    r.holds = false;
    r.diagnostics.push_back(std::move(msg));
  };
  if (n < 2) fail("n = " + std::to_string(n) + " < 2");
  if (d < 2) fail("d = " + std::to_string(d) + " < 2");
  if (n >= 1 && d + 2 > 2 * n) {
    fail("d = " + std::to_string(d) + " exceeds 2n - 2 = " + std::to_string(2 * n >= 2 ? 2 * n - 2 : 0));
  }
  if (d <= deg) fail("d = " + std::to_string(d) + " does not exceed deg(c) = " + std::to_string(deg));
  return r;
}

ConditionResult root_label_frequency(const std::vector<Monomial>& support) {
  ConditionResult r{"root_label_frequency", true, {}};
  if (support.empty()) {
    r.holds = false;
    r.diagnostics.push_back("zero polynomial");
    return r;
  }
  if (support.size() == 1 && support.front().is_one()) return r;

  std::vector<PrimeComponent> primes;
  try {
    primes = minimal_primes(interreduce(support));
  } catch (const UnitIdeal&) {
    r.holds = false;
    r.diagnostics.push_back("1 lies in the support together with other monomials");
    return r;
  }

  r.holds = false;
  for (const auto& prime : primes) {
    std::vector<std::string> bad;
    for (const auto& x : prime.vars) {
      std::size_t count = 0;
      std::size_t max_degree = 0;
      for (const auto& t : support) {
        if (!t.contains(x)) continue;
        ++count;
        max_degree = std::max(max_degree, t.degree());
      }
      if (count < max_degree) {
        bad.push_back(x.name() + " divides " + std::to_string(count) + " monomials of degree up to " +
                      std::to_string(max_degree));
      }
    }
    if (bad.empty()) {
      r.holds = true;
      r.diagnostics.clear();
      return r;
    }
    for (auto& b : bad) r.diagnostics.push_back(std::move(b));
  }
  return r;
}

ConditionResult maximal_degree_partner(const std::vector<Monomial>& support, std::size_t deg) {
  ConditionResult r{"maximal_degree_partner", true, {}};
  if (deg == 0) return r;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].degree() != deg) continue;
    bool found = false;
    for (std::size_t j = 0; j < support.size() && !found; ++j) {
      found = j != i && support[j].degree() == deg && support[i].gcd(support[j]).degree() + 1 == deg;
    }
    if (!found) {
      r.holds = false;
      r.diagnostics.push_back(support[i].to_string() + " has no partner of degree " + std::to_string(deg));
    }
  }
  return r;
}

ConditionResult antichain(const std::vector<Monomial>& support) {
  ConditionResult r{"antichain", true, {}};
  for (const auto& a : support) {
    for (const auto& b : support) {
      if (a != b && a.divides(b)) {
        r.holds = false;
        r.diagnostics.push_back(b.to_string() + " is a proper multiple of " + a.to_string());
      }
    }
  }
  return r;
}

}  // namespace

ScreenReport screen(const Polynomial& f) {
  ScreenReport report;
  const auto support = f.support();
  report.n = support.size();
  report.d = f.variables().size();
  report.degree = f.is_zero() ? 0 : f.degree();
  report.conditions[0] = size_bounds(f, report.n, report.d, report.degree);
  report.conditions[1] = root_label_frequency(support);
  report.conditions[2] = maximal_degree_partner(support, report.degree);
  report.conditions[3] = antichain(support);
  return report;
}

unsigned IncidenceMatrix::row_sum(std::size_t i) const {
  const auto& row = entries.at(i);
  return std::accumulate(row.begin(), row.end(), 0u);
}

unsigned IncidenceMatrix::col_sum(std::size_t j) const {
  unsigned s = 0;
  for (const auto& row : entries) s += row.at(j);
  return s;
}

std::optional<std::size_t> IncidenceMatrix::row_of(const Indeterminate& x) const {
  auto it = std::find(rows.begin(), rows.end(), x);
  if (it == rows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rows.begin());
}

std::string IncidenceMatrix::to_csv() const {
  std::string out;
  for (const auto& m : cols) {
    out += ',';
    std::string cell;
    for (const auto& x : rows) {
      const unsigned e = m.exponent(x);
      if (e == 0) continue;
      if (!cell.empty()) cell += '*';
      cell += x.name();
      if (e > 1) cell += '^' + std::to_string(e);
    }
    out += cell.empty() ? "1" : cell;
  }
  out += '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += rows[i].name();
    for (unsigned e : entries[i]) out += ',' + std::to_string(e);
    out += '\n';
  }
  return out;
}

namespace {

IncidenceMatrix build_matrix(std::vector<Indeterminate> rows, std::vector<Monomial> cols) {
  std::stable_sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (const auto& x : rows) {
      const unsigned ea = a.exponent(x);
      const unsigned eb = b.exponent(x);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  IncidenceMatrix m;
  m.entries.assign(rows.size(), std::vector<unsigned>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m.entries[i][j] = cols[j].exponent(rows[i]);
  }
  m.rows = std::move(rows);
  m.cols = std::move(cols);
  return m;
}

}  // namespace

IncidenceMatrix incidence_matrix(const Polynomial& f, std::span<const Indeterminate> row_order) {
  const auto vars = f.variables();
  std::vector<Indeterminate> rows;
  if (row_order.empty()) {
    rows.assign(vars.begin(), vars.end());
  } else {
    std::set<Indeterminate> seen;
    for (const auto& x : row_order) {
      if (!vars.contains(x)) throw UnknownVariable("row order names " + x.name() + ", absent from the polynomial");
      if (!seen.insert(x).second) throw UnknownVariable("row order repeats " + x.name());
      rows.push_back(x);
    }
    if (rows.size() != vars.size()) {
      for (const auto& x : vars) {
        if (!seen.contains(x)) throw UnknownVariable("row order omits " + x.name());
      }
    }
  }
  return build_matrix(std::move(rows), f.support());
}

IncidenceMatrix subtree_submatrix(const IncidenceMatrix& m, const Indeterminate& x) {
  const auto row = m.row_of(x);
  if (!row) throw UnknownVariable(x.name() + " is not a row of the matrix");

  IncidenceMatrix out;
  std::vector<std::size_t> kept_cols;
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    if (m.entries[*row][j] == 0) continue;
    kept_cols.push_back(j);
    Monomial t = m.cols[j];
    for (unsigned k = 0; k < m.entries[*row][j]; ++k) t = t.divided_by(x);
    out.cols.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (i == *row) continue;
    std::vector<unsigned> entries;
    for (std::size_t j : kept_cols) entries.push_back(m.entries[i][j]);
    if (std::all_of(entries.begin(), entries.end(), [](unsigned e) { return e == 0; })) continue;
    out.rows.push_back(m.rows[i]);
    out.entries.push_back(std::move(entries));
  }
  return out;
}

std::size_t SimplicialComplex::degree(const Indeterminate& v) const {
  return static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(), [&](const auto& f) {
    return std::binary_search(f.begin(), f.end(), v);
  }));
}

SimplicialComplex simplicial_complex(const Polynomial& f) {
  std::vector<Monomial> radicals;
  for (const auto& t : f.support()) radicals.push_back(t.radical());
  SimplicialComplex sc;
  if (radicals.empty()) return sc;
  std::set<Indeterminate> vertices;
  const IdealBasis basis = interreduce(radicals);
  for (const auto& g : basis.generators()) {
    sc.facets.push_back(g.factors());
    vertices.insert(g.factors().begin(), g.factors().end());
  }
  std::sort(sc.facets.begin(), sc.facets.end());
  sc.vertices.assign(vertices.begin(), vertices.end());
  return sc;
}

namespace {

using Facets = std::vector<std::vector<Indeterminate>>;

struct Split {
  std::vector<ComplexComponent> components;
  std::vector<Facets> facets;  // per component
};

// Union-find over vertices joined by co-occurrence in a facet.
Split split_components(const Facets& facets) {
  std::map<Indeterminate, std::size_t> index;
  for (const auto& f : facets) {
    for (const auto& v : f) index.emplace(v, index.size());
  }
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& f : facets) {
    for (std::size_t k = 1; k < f.size(); ++k) parent[find(index[f[k]])] = find(index[f[0]]);
  }

  std::map<std::size_t, std::size_t> slot;  // root -> component position
  Split split;
  for (const auto& [v, i] : index) {
    auto [it, fresh] = slot.emplace(find(i), split.components.size());
    if (fresh) {
      split.components.emplace_back();
      split.facets.emplace_back();
    }
    split.components[it->second].vertices.push_back(v);
  }
  for (const auto& f : facets) {
    if (f.empty()) {
      // The empty facet is its own vertex-free component.
      split.components.emplace_back();
      split.facets.push_back({f});
      continue;
    }
    split.facets[slot.at(find(index.at(f.front())))].push_back(f);
  }

  for (std::size_t c = 0; c < split.components.size(); ++c) {
    auto& comp = split.components[c];
    const auto& cf = split.facets[c];
    comp.facets = cf.size();
    std::size_t best = 0;
    std::size_t ties = 0;
    std::optional<Indeterminate> arg;
    for (const auto& v : comp.vertices) {
      const auto deg = static_cast<std::size_t>(std::count_if(
          cf.begin(), cf.end(), [&](const auto& f) { return std::binary_search(f.begin(), f.end(), v); }));
      if (deg > best) {
        best = deg;
        ties = 1;
        arg = v;
      } else if (deg == best) {
        ++ties;
      }
    }
    if (arg && ties == 1) {
      comp.max_degree_vertex = arg;
      comp.covers_facets = best == cf.size();
    }
  }
  return split;
}

bool saturated_facets(const Facets& facets) {
  if (facets.size() == 1 && facets.front().empty()) return true;
  const Split split = split_components(facets);
  if (split.components.size() < 2) return false;
  for (std::size_t c = 0; c < split.components.size(); ++c) {
    const auto& comp = split.components[c];
    if (!comp.max_degree_vertex || !comp.covers_facets) return false;
    Facets rest;
    for (auto f : split.facets[c]) {
      f.erase(std::find(f.begin(), f.end(), *comp.max_degree_vertex));
      rest.push_back(std::move(f));
    }
    std::sort(rest.begin(), rest.end());
    if (!saturated_facets(rest)) return false;
  }
  return true;
}

}  // namespace

nlohmann::json SaturationReport::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : c.vertices) vertices.push_back(v.name());
    comps.push_back({{"vertices", std::move(vertices)},
                     {"facets", c.facets},
                     {"max_degree_vertex", c.max_degree_vertex ? nlohmann::json(c.max_degree_vertex->name())
                                                               : nlohmann::json(nullptr)},
                     {"covers_facets", c.covers_facets}});
  }
  return {{"saturated", saturated}, {"components", std::move(comps)}};
}

SaturationReport saturation_test(const SimplicialComplex& sc) {
  SaturationReport report;
  if (sc.facets.empty()) return report;
  report.components = split_components(sc.facets).components;
  if (sc.facets.size() == 1 && sc.facets.front().empty()) {
    report.components.clear();
    report.saturated = true;
    return report;
  }
  report.saturated = saturated_facets(sc.facets);
  return report;
}

std::string complex_to_dot(const SimplicialComplex& sc, std::string_view graph_name) {
  std::set<std::pair<Indeterminate, Indeterminate>> edges;
  for (const auto& f : sc.facets) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) edges.emplace(f[a], f[b]);
    }
  }
  std::string out = "graph \"" + std::string(graph_name) + "\" {\n";
  for (const auto& v : sc.vertices) out += "  \"" + v.name() + "\";\n";
  for (const auto& [a, b] : edges) out += "  \"" + a.name() + "\" -- \"" + b.name() + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace stagedtrees
