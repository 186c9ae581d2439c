#include "l2rank/quotients.hpp"

#include "l2rank/errors.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace l2rank {

namespace {

Permutation invert(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

// a then b.
Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

Permutation identity_permutation(std::size_t degree) {
  Permutation out(degree);
  for (std::size_t i = 0; i < degree; ++i) out[i] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || hit[static_cast<std::size_t>(x)])
      return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

}  // namespace

int FiniteQuotient::act(int e, const Word& w) const {
  for (const Letter& l : w.letters()) e = act(e, l);
  return e;
}

int FiniteQuotient::element_order(int e) const {
  int k = 1;
  for (int x = e; x != 0; x = multiply(x, e)) ++k;
  return k;
}

FiniteQuotient FiniteQuotient::from_regular_action(const Presentation& source,
                                                   const std::vector<Permutation>& action) {
  if (static_cast<int>(action.size()) != source.num_generators())
    throw InvalidArgument("quotient: one image per generator required");
  const std::size_t n = action.empty() ? 1 : action.front().size();
  std::vector<Permutation> inverse;
  for (const Permutation& p : action) {
    if (p.size() != n || !is_permutation(p))
      throw InvalidArgument("quotient: generator action is not a permutation");
    inverse.push_back(invert(p));
  }

  // Breadth-first numbering from point 0.
  std::vector<int> number(n, -1);
  std::vector<int> order{0};
  std::vector<Word> words{Word(source.num_generators())};
  number[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < action.size(); ++g)
      for (bool inv : {false, true}) {
        const int d = inv ? inverse[g][static_cast<std::size_t>(order[k])]
                          : action[g][static_cast<std::size_t>(order[k])];
        if (number[static_cast<std::size_t>(d)] >= 0) continue;
        number[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
        words.push_back(multiply_words(words[k], source.generator(static_cast<int>(g), inv)));
      }
  if (order.size() != n) throw InvalidArgument("quotient: action is not transitive");

  FiniteQuotient q;
  q.source_ = source;
  q.element_words_ = std::move(words);
  for (std::size_t g = 0; g < action.size(); ++g) {
    Permutation renumbered(n);
    for (std::size_t k = 0; k < n; ++k)
      renumbered[k] = number[static_cast<std::size_t>(action[g][static_cast<std::size_t>(order[k])])];
    q.inverse_action_.push_back(invert(renumbered));
    q.action_.push_back(std::move(renumbered));
  }
  for (const Word& r : source.relators())
    for (int e = 0; e < q.order(); ++e)
      if (q.act(e, r) != e) throw InvalidArgument("quotient: relator " + source.format(r) +
                                                  " does not map to the identity");
  return q;
}

FiniteQuotient FiniteQuotient::from_permutations(const Presentation& source,
                                                 const std::vector<Permutation>& images,
                                                 int order_cap) {
  if (static_cast<int>(images.size()) != source.num_generators())
    throw InvalidArgument("quotient: one image per generator required");
  const std::size_t degree = images.empty() ? 1 : images.front().size();
  std::vector<Permutation> generators;
  for (const Permutation& p : images) {
    if (p.size() != degree || !is_permutation(p))
      throw InvalidArgument("quotient: images must be permutations of a common degree");
    generators.push_back(p);
    generators.push_back(invert(p));
  }
  for (const Word& r : source.relators()) {
    Permutation value = identity_permutation(degree);
    for (const Letter& l : r.letters())
      value = compose(value, generators[static_cast<std::size_t>(2 * l.generator + (l.inverse ? 1 : 0))]);
    if (value != identity_permutation(degree))
      throw InvalidArgument("quotient: relator " + source.format(r) + " does not map to the identity");
  }

  std::map<Permutation, int> index;
  std::vector<Permutation> elements{identity_permutation(degree)};
  index.emplace(elements.front(), 0);
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const Permutation& g : generators) {
      Permutation next = compose(elements[k], g);
      if (index.contains(next)) continue;
      if (static_cast<int>(elements.size()) >= order_cap)
        throw BudgetExceeded("quotient image exceeds order cap " + std::to_string(order_cap));
      index.emplace(next, static_cast<int>(elements.size()));
      elements.push_back(std::move(next));
    }

  std::vector<Permutation> action(images.size(), Permutation(elements.size()));
  for (std::size_t g = 0; g < images.size(); ++g)
    for (std::size_t k = 0; k < elements.size(); ++k)
      action[g][k] = index.at(compose(elements[k], images[g]));
  return from_regular_action(source, action);
}

namespace {

// Backtracking enumeration of standardized coset tables of a fixed degree:
// the first undefined entry is filled with an existing coset or the next new
// one, and relators are scanned after every assignment for deductions and
// contradictions. Each subgroup of that index is produced exactly once.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int degree)
      : width_(2 * p.num_generators()), degree_(degree) {
    for (const Word& r : p.relators()) {
      std::vector<int> cols;
      for (const Letter& l : r.letters()) cols.push_back(2 * l.generator + (l.inverse ? 1 : 0));
      relators_.push_back(std::move(cols));
    }
  }

  // Calls visit(action) for each conjugacy-minimal complete table; stops when
  // visit returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    State s{1, std::vector<int>(static_cast<std::size_t>(degree_ * width_), -1)};
    stop_ = false;
    descend(s, visit);
  }

 private:
  struct State {
    int used;
    std::vector<int> table;
  };

  int& at(State& s, int c, int x) const { return s.table[static_cast<std::size_t>(c * width_ + x)]; }
  int at(const State& s, int c, int x) const { return s.table[static_cast<std::size_t>(c * width_ + x)]; }

  bool assign(State& s, int c, int x, int d) const {
    int& forward = at(s, c, x);
    int& backward = at(s, d, x ^ 1);
    if ((forward >= 0 && forward != d) || (backward >= 0 && backward != c)) return false;
    forward = d;
    backward = c;
    return true;
  }

  bool propagate(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int c = 0; c < s.used; ++c)
        for (const auto& r : relators_) {
          int f = c, b = c;
          std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.size()) - 1;
          while (i <= j && at(s, f, r[static_cast<std::size_t>(i)]) >= 0)
            f = at(s, f, r[static_cast<std::size_t>(i++)]);
          if (i > j) {
            if (f != b) return false;
            continue;
          }
          while (j >= i && at(s, b, r[static_cast<std::size_t>(j)] ^ 1) >= 0)
            b = at(s, b, r[static_cast<std::size_t>(j--)] ^ 1);
          if (j < i) {
            if (f != b) return false;
          } else if (i == j) {
            if (!assign(s, f, r[static_cast<std::size_t>(i)], b)) return false;
            changed = true;
          }
        }
    }
    return true;
  }

  // Sign of (table standardized from `base`) - (table as stored), compared
  // lexicographically row by row.
  int compare_rebased(const State& s, int base) const {
    const std::size_t n = static_cast<std::size_t>(degree_);
    std::vector<int> number(n, -1), order{base};
    number[static_cast<std::size_t>(base)] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < width_; ++x) {
        const int d = at(s, order[k], x);
        if (number[static_cast<std::size_t>(d)] < 0) {
          number[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
          order.push_back(d);
        }
        const int renamed = number[static_cast<std::size_t>(d)];
        const int original = at(s, static_cast<int>(k), x);
        if (renamed != original) return renamed < original ? -1 : 1;
      }
    return 0;
  }

  // One table per conjugacy class of subgroups: the lexicographically least
  // over all base points.
  bool conjugacy_minimal(const State& s) const {
    for (int base = 1; base < degree_; ++base)
      if (compare_rebased(s, base) < 0) return false;
    return true;
  }

  template <typename Visit>
  void descend(State& s, Visit& visit) {
    if (stop_ || !propagate(s)) return;
    int c = -1, x = -1;
    for (int i = 0; i < s.used && c < 0; ++i)
      for (int y = 0; y < width_; ++y)
        if (at(s, i, y) < 0) {
          c = i;
          x = y;
          break;
        }
    if (c < 0) {
      if (s.used == degree_ && conjugacy_minimal(s)) {
        std::vector<Permutation> action(static_cast<std::size_t>(width_ / 2),
                                        Permutation(static_cast<std::size_t>(degree_)));
        for (int g = 0; g < width_ / 2; ++g)
          for (int i = 0; i < degree_; ++i)
            action[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)] = at(s, i, 2 * g);
        if (!visit(action)) stop_ = true;
      }
      return;
    }
    for (int d = 0; d < s.used && !stop_; ++d) {
      if (at(s, d, x ^ 1) >= 0) continue;
      State next = s;
      assign(next, c, x, d);
      descend(next, visit);
    }
    if (s.used < degree_ && !stop_) {
      State next = s;
      const int d = next.used++;
      assign(next, c, x, d);
      descend(next, visit);
    }
  }

  int width_;
  int degree_;
  std::vector<std::vector<int>> relators_;
  bool stop_ = false;
};

}  // namespace

std::vector<FiniteQuotient> search_finite_quotients(const Presentation& p, int max_degree,
                                                    int max_count, int order_cap) {
  if (max_degree < 1 || max_degree > 12)
    throw InvalidArgument("search_finite_quotients: max_degree must lie in 1..12");
  std::vector<FiniteQuotient> found;
  if (max_count < 1) return found;
  for (int degree = 1; degree <= max_degree && static_cast<int>(found.size()) < max_count; ++degree) {
    LowIndexSearch search(p, degree);
    search.run([&](const std::vector<Permutation>& action) {
      try {
        FiniteQuotient q = FiniteQuotient::from_permutations(p, action, order_cap);
        if (std::find(found.begin(), found.end(), q) == found.end()) found.push_back(std::move(q));
      } catch (const BudgetExceeded&) {
        // Image larger than the cap: not usable at this scale.
      }
      return static_cast<int>(found.size()) < max_count;
    });
  }
  std::stable_sort(found.begin(), found.end(), [](const FiniteQuotient& a, const FiniteQuotient& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.regular_action() < b.regular_action();
  });
  return found;
}

FiniteQuotient intersect_quotients(const FiniteQuotient& a, const FiniteQuotient& b, int order_cap) {
  if (a.source().to_string() != b.source().to_string())
    throw InvalidArgument("intersect_quotients: quotients of different presentations");
  const int n = a.source().num_generators();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> elements{{0, 0}};
  index.emplace(elements.front(), 0);
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (int g = 0; g < n; ++g)
      for (bool inv : {false, true}) {
        const Letter l{g, inv};
        const std::pair<int, int> next{a.act(elements[k].first, l), b.act(elements[k].second, l)};
        if (index.contains(next)) continue;
        if (static_cast<int>(elements.size()) >= order_cap)
          throw BudgetExceeded("intersection exceeds order cap " + std::to_string(order_cap));
        index.emplace(next, static_cast<int>(elements.size()));
        elements.push_back(next);
      }
  std::vector<Permutation> action(static_cast<std::size_t>(n), Permutation(elements.size()));
  for (int g = 0; g < n; ++g)
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const Letter l{g, false};
      action[static_cast<std::size_t>(g)][k] =
          index.at({a.act(elements[k].first, l), b.act(elements[k].second, l)});
    }
  return FiniteQuotient::from_regular_action(a.source(), action);
}

bool factors_through(const FiniteQuotient& finer, const FiniteQuotient& coarser) {
  if (finer.source().num_generators() != coarser.source().num_generators()) return false;
  std::vector<int> image(static_cast<std::size_t>(finer.order()));
  for (int e = 0; e < finer.order(); ++e)
    image[static_cast<std::size_t>(e)] = coarser.evaluate(finer.element_word(e));
  for (int e = 0; e < finer.order(); ++e)
    for (int g = 0; g < finer.source().num_generators(); ++g) {
      const Letter l{g, false};
      if (image[static_cast<std::size_t>(finer.act(e, l))] !=
          coarser.act(image[static_cast<std::size_t>(e)], l))
        return false;
    }
  return true;
}

QuotientChain build_chain(const Presentation& p, std::vector<FiniteQuotient> pool, int length,
                          int order_cap) {
  if (pool.empty()) throw InvalidArgument("build_chain: empty quotient pool");
  std::stable_sort(pool.begin(), pool.end(), [](const FiniteQuotient& a, const FiniteQuotient& b) {
    return a.order() < b.order();
  });
  QuotientChain chain;
  for (const FiniteQuotient& q : pool) {
    if (static_cast<int>(chain.quotients.size()) >= length) break;
    if (q.source().to_string() != p.to_string())
      throw InvalidArgument("build_chain: pool quotient of a different presentation");
    if (q.order() == 1) continue;
    try {
      FiniteQuotient next =
          chain.quotients.empty() ? q : intersect_quotients(chain.quotients.back(), q, order_cap);
      if (!chain.quotients.empty() && next.order() <= chain.quotients.back().order()) continue;
      chain.indices.push_back(next.order());
      chain.quotients.push_back(std::move(next));
    } catch (const BudgetExceeded&) {
      chain.cap_reached = true;
      break;
    }
  }
  chain.nested_certified = true;
  for (std::size_t i = 1; i < chain.quotients.size(); ++i)
    chain.nested_certified =
        chain.nested_certified && factors_through(chain.quotients[i], chain.quotients[i - 1]);
  return chain;
}

BettiEstimate luck_estimate(const Presentation& p, const QuotientChain& chain, int jobs) {
  if (chain.quotients.empty()) throw InvalidArgument("luck_estimate: empty chain");
  const std::size_t count = chain.quotients.size();
  std::vector<int> betti(count, 0);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < count; start += batch) {
    std::vector<std::future<int>> running;
    for (std::size_t i = start; i < std::min(count, start + batch); ++i)
      running.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [&p, &q = chain.quotients[i]] {
                                     return subgroup_betti1(p, q.kernel_table());
                                   }));
    for (std::size_t i = 0; i < running.size(); ++i) betti[start + i] = running[i].get();
  }

  BettiEstimate estimate;
  for (std::size_t i = 0; i < count; ++i) {
    const int m = chain.quotients[i].order();
    estimate.samples.push_back({m, betti[i], Rational(BigInt(betti[i])) / Rational(BigInt(m))});
  }
  estimate.limsup_lower_bound = estimate.samples.back().ratio;
  for (std::size_t i = count / 2; i < count; ++i)
    estimate.limsup_lower_bound = std::max(estimate.limsup_lower_bound, estimate.samples[i].ratio);
  return estimate;
}

}  // namespace l2rank
