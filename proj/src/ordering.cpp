#include "nia/ordering.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nia {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

void record(PropertyCheck& c, bool ok, const std::function<std::string()>& witness) {
  ++c.checked;
  if (ok) return;
  c.holds = false;
  ++c.violations;
  if (c.counterexamples.size() < kMaxWitnesses) c.counterexamples.push_back(witness());
}

}  // namespace

std::string OrderedPair::toString() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<OrderedPair> pairsOf(std::uint64_t n) {
  std::vector<OrderedPair> out;
  for (std::uint64_t i = 0; i <= n; ++i) {
    for (std::uint64_t j = i; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

bool inPairs(std::uint64_t n, const OrderedPair& p) { return p.i <= p.j && p.j <= n; }

bool lessdot(std::uint64_t n, const OrderedPair& a, const OrderedPair& b) {
  if (!inPairs(n, a) || !inPairs(n, b)) {
    throw std::invalid_argument("pair outside A_" + std::to_string(n));
  }
  const auto [i, j] = a;
  const auto [l, k] = b;
  return i <= n && k <= n && l <= n && j < n && l <= i && k <= j &&
         ((i == l) == (j != k)) && ((j == k) == (i != l));
}

OrderingReport checkOrderingProperties(std::uint64_t n) {
  OrderingReport r;
  r.n = n;
  r.antiReflexive.name = "anti-reflexive";
  r.antiSymmetric.name = "anti-symmetric";
  r.transitive.name = "transitive";
  r.acyclic.name = "acyclic";
  r.glbClaim.name = "chains have a greatest lower bound (i,n)";

  const std::vector<OrderedPair> elems = pairsOf(n);
  const std::size_t size = elems.size();
  r.elements = size;
  std::vector<std::vector<bool>> less(size, std::vector<bool>(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      less[a][b] = lessdot(n, elems[a], elems[b]);
      if (less[a][b]) ++r.relatedPairs;
    }
  }
  auto name = [&](std::size_t a) { return elems[a].toString(); };

  for (std::size_t a = 0; a < size; ++a) {
    record(r.antiReflexive, !less[a][a], [&] { return name(a) + " < " + name(a); });
    bool related = false;
    for (std::size_t b = 0; b < size; ++b) related = related || less[a][b] || less[b][a];
    if (!related) r.isolated.push_back(elems[a]);
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      record(r.antiSymmetric, !(less[a][b] && less[b][a]),
             [&] { return name(a) + " < " + name(b) + " and " + name(b) + " < " + name(a); });
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (!less[a][b]) continue;
      for (std::size_t c = 0; c < size; ++c) {
        if (!less[b][c]) continue;
        record(r.transitive, less[a][c], [&] {
          return name(a) + " < " + name(b) + " < " + name(c) + " but not " + name(a) + " < " +
                 name(c);
        });
      }
    }
  }

  // Depth-first search for a cycle.
  std::vector<int> colour(size, 0);
  std::vector<std::size_t> stack;
  std::function<bool(std::size_t)> cycleFrom = [&](std::size_t a) {
    colour[a] = 1;
    stack.push_back(a);
    for (std::size_t b = 0; b < size; ++b) {
      if (!less[a][b]) continue;
      if (colour[b] == 1) {
        stack.push_back(b);
        return true;
      }
      if (colour[b] == 0 && cycleFrom(b)) return true;
    }
    colour[a] = 2;
    stack.pop_back();
    return false;
  };
  for (std::size_t a = 0; a < size; ++a) {
    if (colour[a] != 0) continue;
    stack.clear();
    bool cyc = cycleFrom(a);
    record(r.acyclic, !cyc, [&] {
      std::string w;
      for (std::size_t v : stack) w += (w.empty() ? "" : " < ") + name(v);
      return w;
    });
  }

  // Chains: nonempty sets of pairwise comparable elements.
  auto atMost = [&](std::size_t a, std::size_t b) { return a == b || less[a][b]; };
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> visit = [&](std::size_t from) {
    if (!chain.empty()) {
      ++r.chains;
      std::vector<std::size_t> lower;
      for (std::size_t g = 0; g < size; ++g) {
        bool below = true;
        for (std::size_t c : chain) below = below && atMost(g, c);
        if (below) lower.push_back(g);
      }
      bool ok = false;
      for (std::size_t g : lower) {
        if (elems[g].j != n) continue;
        bool greatest = true;
        for (std::size_t h : lower) greatest = greatest && atMost(h, g);
        ok = ok || greatest;
      }
      record(r.glbClaim, ok, [&] {
        std::string w = "{";
        for (std::size_t c : chain) w += (w.size() > 1 ? " " : "") + name(c);
        return w + "}";
      });
    }
    for (std::size_t a = from; a < size; ++a) {
      bool comparable = true;
      for (std::size_t c : chain) comparable = comparable && (less[a][c] || less[c][a]);
      if (!comparable) continue;
      chain.push_back(a);
      visit(a + 1);
      chain.pop_back();
    }
  };
  visit(0);
  return r;
}

std::string OrderingReport::toString() const {
  std::ostringstream out;
  out << "ordering n=" << n << ": " << elements << " elements, " << relatedPairs
      << " related pairs, " << chains << " chains\n";
  out << "isolated:";
  for (const OrderedPair& p : isolated) out << ' ' << p.toString();
  out << '\n';
  for (const PropertyCheck* c : {&antiReflexive, &antiSymmetric, &transitive, &acyclic, &glbClaim}) {
    out << "  " << c->name << ": " << (c->holds ? "holds" : "fails") << " (" << c->checked
        << " checked, " << c->violations << " violations)\n";
    for (const std::string& w : c->counterexamples) out << "    e.g. " << w << '\n';
  }
  return out.str();
}

}  // namespace nia
