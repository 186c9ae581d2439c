#include "l2rank/cosets.hpp"

#include "l2rank/errors.hpp"
#include "l2rank/homology.hpp"

#include <deque>
#include <map>

namespace l2rank {

namespace {

// Column 2g is generator g, column 2g+1 its inverse.
int column(const Letter& l) { return 2 * l.generator + (l.inverse ? 1 : 0); }
int inverse_column(int x) { return x ^ 1; }

struct BudgetHit {};

class Enumerator {
 public:
  Enumerator(int num_generators, int max_cosets)
      : width_(2 * num_generators), max_cosets_(max_cosets) {
    new_coset();
  }

  void scan_and_fill(int coset, const std::vector<int>& word) {
    int f = coset;
    int b = coset;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(word.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, word[static_cast<std::size_t>(i)]) >= 0)
        f = entry(f, word[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_column(word[static_cast<std::size_t>(j)])) >= 0)
        b = entry(b, inverse_column(word[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int x = word[static_cast<std::size_t>(i)];
        set(f, x, b);
        return;
      }
      define(f, word[static_cast<std::size_t>(i)]);
    }
  }

  void run(const std::vector<std::vector<int>>& relators,
           const std::vector<std::vector<int>>& subgroup) {
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const auto& r : relators) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
      }
      if (!alive(c)) continue;
      for (int x = 0; x < width_; ++x)
        if (entry(c, x) < 0) define(c, x);
    }
  }

  // Live cosets renumbered breadth-first from coset 0.
  std::vector<std::vector<int>> standardized_action() const {
    std::vector<int> number(table_.size(), -1);
    std::vector<int> order{0};
    number[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < width_; ++x) {
        const int d = entry(order[k], x);
        if (number[static_cast<std::size_t>(d)] < 0) {
          number[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::vector<int>> action(static_cast<std::size_t>(width_ / 2),
                                         std::vector<int>(order.size()));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int g = 0; g < width_ / 2; ++g)
        action[static_cast<std::size_t>(g)][k] =
            number[static_cast<std::size_t>(entry(order[k], 2 * g))];
    return action;
  }

  int defined() const { return static_cast<int>(table_.size()); }

 private:
  int entry(int c, int x) const {
    return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
  }
  int& entry(int c, int x) {
    return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
  }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int new_coset() {
    if (static_cast<int>(table_.size()) >= max_cosets_) throw BudgetHit{};
    table_.emplace_back(static_cast<std::size_t>(width_), -1);
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    return static_cast<int>(table_.size()) - 1;
  }

  void set(int c, int x, int d) {
    entry(c, x) = d;
    entry(d, inverse_column(x)) = c;
  }

  void define(int c, int x) { set(c, x, new_coset()); }

  int representative(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root)
      root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = representative(a);
    b = representative(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < width_; ++x) {
        const int f = entry(e, x);
        if (f < 0) continue;
        entry(f, inverse_column(x)) = -1;
        const int e1 = representative(e);
        const int f1 = representative(f);
        if (entry(e1, x) >= 0) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, inverse_column(x)) >= 0) {
          merge(e1, entry(f1, inverse_column(x)), queue);
        } else {
          set(e1, x, f1);
        }
      }
    }
  }

  int width_;
  int max_cosets_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

std::vector<int> columns_of(const Word& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) out.push_back(column(l));
  return out;
}

}  // namespace

CosetTable CosetTable::from_action(std::vector<std::vector<int>> action) {
  CosetTable t;
  const std::size_t n = action.empty() ? 1 : action.front().size();
  t.backward_.assign(action.size(), std::vector<int>(n, -1));
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (action[g].size() != n) throw InvalidArgument("action vectors differ in length");
    for (std::size_t c = 0; c < n; ++c) {
      const int d = action[g][c];
      if (d < 0 || static_cast<std::size_t>(d) >= n || t.backward_[g][static_cast<std::size_t>(d)] >= 0)
        throw InvalidArgument("action is not a permutation");
      t.backward_[g][static_cast<std::size_t>(d)] = static_cast<int>(c);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < action.size(); ++g)
      for (int d : {action[g][static_cast<std::size_t>(order[k])],
                    t.backward_[g][static_cast<std::size_t>(order[k])]})
        if (!seen[static_cast<std::size_t>(d)]) {
          seen[static_cast<std::size_t>(d)] = true;
          order.push_back(d);
        }
  if (order.size() != n) throw InvalidArgument("action is not transitive");
  t.status_ = EnumerationStatus::closed;
  t.num_cosets_ = static_cast<int>(n);
  t.defined_ = static_cast<int>(n);
  t.forward_ = std::move(action);
  return t;
}

CosetTable CosetTable::exceeded(int num_generators, int defined) {
  CosetTable t;
  t.status_ = EnumerationStatus::exceeded_budget;
  t.defined_ = defined;
  t.forward_.resize(static_cast<std::size_t>(num_generators));
  t.backward_.resize(static_cast<std::size_t>(num_generators));
  return t;
}

int CosetTable::act(int coset, const Word& w) const {
  for (const Letter& l : w.letters()) coset = act(coset, l);
  return coset;
}

bool CosetTable::satisfies(const Presentation& p) const {
  if (!closed()) return false;
  for (const Word& r : p.relators())
    for (int c = 0; c < num_cosets_; ++c)
      if (act(c, r) != c) return false;
  return true;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        int max_cosets) {
  if (max_cosets < 1) throw InvalidArgument("todd_coxeter: max_cosets must be >= 1");
  std::vector<std::vector<int>> relators, subgroup;
  for (const Word& r : p.relators()) relators.push_back(columns_of(r));
  for (const Word& w : subgroup_gens) {
    if (w.rank() != p.num_generators())
      throw InvalidArgument("todd_coxeter: subgroup generator over the wrong alphabet");
    subgroup.push_back(columns_of(w));
  }
  Enumerator e(p.num_generators(), max_cosets);
  try {
    e.run(relators, subgroup);
  } catch (const BudgetHit&) {
    return CosetTable::exceeded(p.num_generators(), e.defined());
  }
  CosetTable t = CosetTable::from_action(e.standardized_action());
  t.defined_ = e.defined();
  return t;
}

TrivialityVerdict trivial_quotient_check(const Presentation& p, const std::vector<Word>& killed,
                                         int max_cosets) {
  const CosetTable t = todd_coxeter(p.with_relators(killed), {}, max_cosets);
  return t.closed() && t.index() == 1 ? TrivialityVerdict::certified_trivial
                                      : TrivialityVerdict::inconclusive;
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  if (!t.closed()) throw InvalidArgument("reidemeister_schreier: coset table is not closed");
  if (t.num_generators() != p.num_generators())
    throw InvalidArgument("reidemeister_schreier: table and presentation disagree on generators");
  const int n = p.num_generators();
  const int m = t.index();

  // Breadth-first Schreier tree; tree_edge[c] = column used to first reach c.
  std::vector<int> tree_from(static_cast<std::size_t>(m), -1);
  std::vector<int> tree_edge(static_cast<std::size_t>(m), -1);
  std::vector<int> order{0};
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int x = 0; x < 2 * n; ++x) {
      const int d = t.act(order[k], Letter{x / 2, (x & 1) != 0});
      if (seen[static_cast<std::size_t>(d)]) continue;
      seen[static_cast<std::size_t>(d)] = true;
      tree_from[static_cast<std::size_t>(d)] = order[k];
      tree_edge[static_cast<std::size_t>(d)] = x;
      order.push_back(d);
    }

  // Schreier generator for (c, g) unless the edge c --g--> c.g lies on the tree.
  std::vector<int> schreier(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), -1);
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c)
    for (int g = 0; g < n; ++g) {
      const int d = t.act(c, Letter{g, false});
      const bool forward_tree = tree_from[static_cast<std::size_t>(d)] == c &&
                                tree_edge[static_cast<std::size_t>(d)] == 2 * g;
      const bool backward_tree = tree_from[static_cast<std::size_t>(c)] == d &&
                                 tree_edge[static_cast<std::size_t>(c)] == 2 * g + 1;
      if (forward_tree || backward_tree) continue;
      schreier[static_cast<std::size_t>(c * n + g)] = static_cast<int>(names.size());
      names.push_back("s" + std::to_string(c) + "_" + p.generator_names()[static_cast<std::size_t>(g)]);
    }

  std::vector<std::vector<Letter>> rewritten;
  for (const Word& r : p.relators())
    for (int c = 0; c < m; ++c) {
      std::vector<Letter> letters;
      int e = c;
      for (const Letter& l : r.letters()) {
        if (!l.inverse) {
          const int s = schreier[static_cast<std::size_t>(e * n + l.generator)];
          if (s >= 0) letters.push_back({s, false});
          e = t.act(e, l);
        } else {
          const int f = t.act(e, l);
          const int s = schreier[static_cast<std::size_t>(f * n + l.generator)];
          if (s >= 0) letters.push_back({s, true});
          e = f;
        }
      }
      rewritten.push_back(std::move(letters));
    }

  // Eliminate generators equal to the identity by a length-one relator.
  const int count = static_cast<int>(names.size());
  std::vector<bool> killed(static_cast<std::size_t>(count), false);
  std::vector<Word> words;
  for (bool changed = true; changed;) {
    changed = false;
    words.clear();
    for (const auto& letters : rewritten) {
      std::vector<Letter> kept;
      for (const Letter& l : letters)
        if (!killed[static_cast<std::size_t>(l.generator)]) kept.push_back(l);
      Word w = Word(count, kept).cyclically_reduced();
      if (w.empty()) continue;
      if (w.length() == 1) {
        killed[static_cast<std::size_t>(w[0].generator)] = true;
        changed = true;
      }
      words.push_back(std::move(w));
    }
  }

  std::vector<int> renumber(static_cast<std::size_t>(count), -1);
  std::vector<std::string> kept_names;
  for (int s = 0; s < count; ++s)
    if (!killed[static_cast<std::size_t>(s)]) {
      renumber[static_cast<std::size_t>(s)] = static_cast<int>(kept_names.size());
      kept_names.push_back(names[static_cast<std::size_t>(s)]);
    }
  const int rank = static_cast<int>(kept_names.size());
  std::vector<Word> relators;
  for (const Word& w : words) {
    std::vector<Letter> letters;
    for (const Letter& l : w.letters())
      letters.push_back({renumber[static_cast<std::size_t>(l.generator)], l.inverse});
    relators.emplace_back(rank, letters);
  }
  return Presentation(std::move(kept_names), std::move(relators));
}

int subgroup_betti1(const Presentation& p, const CosetTable& t) {
  return betti1_rank(reidemeister_schreier(p, t));
}

}  // namespace l2rank
