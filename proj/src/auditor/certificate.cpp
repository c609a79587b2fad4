#include "acyclic/auditor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acyclic {

namespace {

PathFamily family(std::vector<std::vector<int>> paths) { return PathFamily{std::move(paths)}; }

DeductionStep step(std::vector<std::vector<int>> paths, std::vector<int> remaining, std::vector<Membership> facts) {
  return {family(std::move(paths)), std::move(remaining), std::move(facts)};
}

using Block = std::vector<int>;

std::string block_str(const Block& b) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << "}";
  return os.str();
}

std::string relation_str(const std::vector<int>& rel) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < rel.size(); ++t) {
    const int c = rel[t];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const int a = std::abs(c);
    if (a != 1) os << a << "*";
    os << "l" << t + 1;
    first = false;
  }
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

// First exact cover of 1..n by the given blocks, trying blocks in order.
bool exact_cover(int n, const std::vector<Block>& blocks, std::vector<char>& used, std::vector<Block>& chosen) {
  int first = 0;
  for (int v = 1; v <= n && first == 0; ++v)
    if (!used[v]) first = v;
  if (first == 0) return true;
  for (const Block& b : blocks) {
    if (!std::binary_search(b.begin(), b.end(), first)) continue;
    if (std::any_of(b.begin(), b.end(), [&](int v) { return used[v] != 0; })) continue;
    for (int v : b) used[v] = 1;
    chosen.push_back(b);
    if (exact_cover(n, blocks, used, chosen)) return true;
    chosen.pop_back();
    for (int v : b) used[v] = 0;
  }
  return false;
}

}  // namespace

std::vector<DeductionStep> example36_steps() {
  // Axis 6; spokes 1, 2, 3 with legs {4, 5}, {7, 8}, {9, 10}.
  std::vector<DeductionStep> s;
  const auto single = [](int v) { return std::vector<Membership>{{3, {v}, 1}}; };
  s.push_back(step({{4, 1, 5}, {7, 2, 8}, {10, 3, 9}}, {6}, single(6)));
  s.push_back(step({{4, 1, 6, 3, 10}, {7, 2, 8}, {9}}, {5}, single(5)));
  s.push_back(step({{5, 1, 6, 3, 10}, {7, 2, 8}, {9}}, {4}, single(4)));
  s.push_back(step({{4, 1, 6, 2, 8}, {10, 3, 9}, {5}}, {7}, single(7)));
  s.push_back(step({{4, 1, 6, 2, 7}, {10, 3, 9}, {5}}, {8}, single(8)));
  s.push_back(step({{4, 1, 6, 3, 9}, {7, 2, 8}, {5}}, {10}, single(10)));
  s.push_back(step({{4, 1, 6, 3, 10}, {7, 2, 8}, {5}}, {9}, single(9)));

  s.push_back(step({{7, 2, 6, 3, 10}, {8}, {9}}, {1, 4, 5}, {{3, {1, 4, 5}, 1}}));
  s.push_back(step({{4, 1, 6, 3, 10}, {5}, {9}}, {2, 7, 8}, {{3, {2, 7, 8}, 1}}));
  s.push_back(step({{7, 2, 6, 1, 4}, {8}, {5}}, {3, 9, 10}, {{3, {3, 9, 10}, 1}}));

  s.push_back(step({{7, 2, 6, 3, 10}}, {1, 4, 5, 8, 9}, {{2, {1, 4, 5}, 1}, {4, {1, 4, 5}, 1}}));
  s.push_back(step({{4, 1, 6, 2, 7}}, {3, 5, 8, 9, 10}, {{2, {3, 9, 10}, 1}, {4, {3, 9, 10}, 1}}));
  s.push_back(step({{4, 1, 6, 3, 10}}, {2, 5, 7, 8, 9}, {{2, {2, 7, 8}, 1}, {4, {2, 7, 8}, 1}}));
  return s;
}

Derivation derive_trace_relation(const Tree& tree, const std::vector<int>& mults, const std::vector<DeductionStep>& steps) {
  const int n = tree.n();
  const int q = static_cast<int>(mults.size());
  int total = 0;
  for (int m : mults) total += m;
  if (total != n) throw std::invalid_argument("multiplicities do not sum to the tree order");

  std::map<Block, std::vector<int>> lb;
  const auto lower = [&](const Block& c, int tag) {
    const auto it = lb.find(c);
    return it == lb.end() ? 0 : it->second[tag];
  };
  // Largest multiplicity lambda_tag can have in block c given what is known.
  const auto upper = [&](const Block& c, int tag) {
    int u = static_cast<int>(c.size());
    for (int t = 0; t < q; ++t)
      if (t != tag) u -= lower(c, t);
    return std::max(u, 0);
  };

  Derivation out;
  for (std::size_t idx = 0; idx < steps.size(); ++idx) {
    const DeductionStep& st = steps[idx];
    validate_path_family(tree, st.paths);
    const Subgraph rest = delete_paths(tree, st.paths);
    Block remaining = st.remaining;
    std::sort(remaining.begin(), remaining.end());
    if (remaining != rest.labels) throw std::invalid_argument("step " + std::to_string(idx) + ": remaining set does not match");

    std::vector<Block> components;
    for (const auto& comp : connected_components(rest.graph)) {
      Block c;
      for (int v : comp) c.push_back(rest.labels[v - 1]);
      std::sort(c.begin(), c.end());
      components.push_back(std::move(c));
    }

    const int k = st.paths.size();
    std::vector<std::pair<Block, std::pair<int, int>>> learned;
    for (const Membership& mem : st.memberships) {
      if (mem.tag < 1 || mem.tag > q || mem.min_mult < 1)
        throw std::invalid_argument("step " + std::to_string(idx) + ": bad membership");
      Block x = mem.vertices;
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
      const int tag = mem.tag - 1;
      const std::string who = "step " + std::to_string(idx) + " lambda_" + std::to_string(mem.tag) + " in " + block_str(x);

      int inside = 0, slack = mults[tag] - k;
      bool aligned = true;
      for (const Block& c : components) {
        const auto hit = std::count_if(c.begin(), c.end(), [&](int v) { return std::binary_search(x.begin(), x.end(), v); });
        if (hit == static_cast<long>(c.size())) inside += static_cast<int>(c.size());
        else if (hit == 0) slack -= upper(c, tag);
        else aligned = false;
      }
      if (!aligned || inside != static_cast<int>(x.size())) {
        out.unlicensed.push_back(who + ": not a union of remaining components");
      } else if (mults[tag] < k + 1) {
        out.unlicensed.push_back(who + ": multiplicity " + std::to_string(mults[tag]) + " < k + 1");
      } else if (slack < mem.min_mult) {
        out.unlicensed.push_back(who + ": only " + std::to_string(slack) + " guaranteed");
      } else {
        learned.push_back({x, {tag, mem.min_mult}});
      }
    }
    for (const auto& [x, fact] : learned) {
      auto& row = lb.try_emplace(x, std::vector<int>(static_cast<std::size_t>(q), 0)).first->second;
      row[fact.first] = std::max(row[fact.first], fact.second);
    }
  }

  std::vector<Block> determined;
  for (const auto& [c, row] : lb) {
    int sum = 0;
    for (int v : row) sum += v;
    if (sum == static_cast<int>(c.size())) {
      out.blocks.push_back({c, row});
      determined.push_back(c);
    }
  }
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Block> chosen;
  if (exact_cover(n, determined, used, chosen)) {
    out.partition = chosen;
    out.relation = mults;
    for (const Block& c : chosen)
      for (int t = 0; t < q; ++t) out.relation[t] -= lb.at(c)[t];
  }
  return out;
}

namespace {

// Shared part of both certificate overloads; `evaluate` maps the relation to
// its value on sigma.
template <class Eval>
AuditReport certify(const std::vector<DeductionStep>& steps, const std::string& label, Eval evaluate) {
  AuditReport r;
  r.claim = "ex-3.6";
  r.checked = 1;
  const Derivation d = derive_trace_relation(figure2_tree(), {1, 2, 4, 2, 1}, steps);
  for (const auto& why : d.unlicensed) r.fail(label, "licensed deduction", why);
  if (d.partition.empty()) {
    r.fail(label, "determined blocks partition the vertices", "no partition");
    return r;
  }
  std::string parts;
  for (const auto& b : d.partition) parts += block_str(b);
  r.notes.push_back("partition " + parts);
  r.notes.push_back(relation_str(d.relation));
  const Rational value = evaluate(d.relation);
  if (value != 0) r.fail(label, relation_str(d.relation), "left side = " + to_string(value));
  return r;
}

}  // namespace

AuditReport example36_certificate(const std::vector<DeductionStep>& steps, const std::vector<Rational>& sigma) {
  std::vector<Rational> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rational> values;
  std::vector<int> mults;
  for (const Rational& v : sorted) {
    if (!values.empty() && values.back() == v) ++mults.back();
    else {
      values.push_back(v);
      mults.push_back(1);
    }
  }
  if (mults != std::vector<int>{1, 2, 4, 2, 1}) throw std::invalid_argument("spectrum does not group as <1,2,4,2,1>");
  std::string label = "sigma=(";
  for (std::size_t i = 0; i < sorted.size(); ++i) label += (i ? "," : "") + to_string(sorted[i]);
  label += ")";
  return certify(steps, label, [&](const std::vector<int>& rel) {
    Rational sum;
    for (std::size_t t = 0; t < rel.size(); ++t) sum += rel[t] * values[t];
    return sum;
  });
}

AuditReport example36_certificate(const std::vector<DeductionStep>& steps, const EigenStructure& sigma) {
  if (sigma.multiplicities() != std::vector<int>{1, 2, 4, 2, 1})
    throw std::invalid_argument("spectrum does not group as <1,2,4,2,1>");
  return certify(steps, "sigma=eigen structure", [&](const std::vector<int>& rel) {
    // Group tags by square-free factor; a factor whose real roots are all
    // tagged with the same coefficient contributes coeff * (sum of roots).
    std::vector<std::pair<Poly, std::vector<int>>> by_factor;
    for (std::size_t t = 0; t < sigma.groups.size(); ++t) {
      const Poly& g = sigma.groups[t].factor;
      auto it = std::find_if(by_factor.begin(), by_factor.end(), [&](const auto& e) { return e.first == g; });
      if (it == by_factor.end()) by_factor.push_back({g, {static_cast<int>(t)}});
      else it->second.push_back(static_cast<int>(t));
    }
    Rational sum;
    for (const auto& [g, tags] : by_factor) {
      const int c = rel[tags.front()];
      for (int t : tags)
        if (rel[t] != c) throw std::invalid_argument("relation is not constant on the roots of " + to_string(g));
      if (static_cast<int>(tags.size()) != g.degree()) throw std::invalid_argument("factor " + to_string(g) + " has non-real roots");
      if (c != 0) sum += c * (-g.coeff(g.degree() - 1) / g.coeff(g.degree()));
    }
    return sum;
  });
}

}  // namespace acyclic
