#include "orepi/rewrite.hpp"

#include <algorithm>

namespace orepi {

namespace {

struct Match {
  std::size_t pos;
  std::size_t rule;
};

std::optional<Match> leftmost_match(const Presentation& p, const Word& w) {
  const auto& rules = p.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r : p.rules_starting_with(letter_at(w, pos))) {
      const Word& lhs = rules[r].lhs;
      if (w.size() - pos >= lhs.size() && w.compare(pos, lhs.size(), lhs) == 0) return Match{pos, r};
    }
  }
  return std::nullopt;
}

// w with the occurrence of rule r at pos replaced by the rule's rhs, times c.
NCPoly apply_at(const Presentation& p, const Word& w, std::size_t pos, std::size_t r, const Coeff& c) {
  const Rule& rule = p.rules()[r];
  NCPoly out = p.zero();
  Word head = w.substr(0, pos), tail = w.substr(pos + rule.lhs.size());
  for (const auto& [rw, rc] : rule.rhs.terms()) out.add_term(head + rw + tail, c * rc);
  return out;
}

}  // namespace

bool is_irreducible(const Presentation& p, const Word& w) { return !leftmost_match(p, w); }

std::vector<Word> irreducible_words(const Presentation& p, unsigned max_weight) {
  // A word is irreducible iff its proper prefix is and no lhs ends at its last letter.
  std::vector<Word> out{Word()}, frontier{Word()};
  const auto& order = *p.order();
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (std::size_t l = 0; l < p.num_generators(); ++l) {
        Word e = w + static_cast<char>(l);
        if (order.weight_of(e) > max_weight) continue;
        bool ok = true;
        for (const auto& r : p.rules())
          if (r.lhs.size() <= e.size() && e.compare(e.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
            ok = false;
            break;
          }
        if (ok) next.push_back(std::move(e));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return order.less(a, b); });
  return out;
}

NCPoly normal_form(const Presentation& p, const NCPoly& a) {
  if (!p.oriented()) throw Error(Errc::OrientationFailure, "presentation has an rhs term above its lhs");
  NCPoly::Terms work(WordLess{p.order().get()});
  for (const auto& kv : a.terms()) work.emplace(kv);
  NCPoly result = p.zero();
  const auto& rules = p.rules();
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Coeff c = it->second;
    work.erase(it);
    auto m = leftmost_match(p, w);
    if (!m) {
      result.add_term(w, c);
      continue;
    }
    const Rule& rule = rules[m->rule];
    Word head = w.substr(0, m->pos), tail = w.substr(m->pos + rule.lhs.size());
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Coeff add = c * rc;
      auto [slot, inserted] = work.try_emplace(head + rw + tail, add);
      if (!inserted) {
        slot->second += add;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
  }
  return result;
}

NCPoly multiply(const Presentation& p, const NCPoly& a, const NCPoly& b) {
  return normal_form(p, a.concat(b));
}

NCPoly q_commutator(const Presentation& p, const NCPoly& a, const NCPoly& b, const Coeff& lambda) {
  return normal_form(p, a.concat(b) - lambda * b.concat(a));
}

NCPoly power(const Presentation& p, const NCPoly& a, unsigned n) {
  NCPoly r = p.scalar(p.one());
  NCPoly base = normal_form(p, a);
  for (unsigned i = 0; i < n; ++i) r = multiply(p, r, base);
  return r;
}

const CriticalPair* ConfluenceReport::first_failure() const {
  for (const auto& cp : pairs)
    if (!cp.residual.is_zero()) return &cp;
  return nullptr;
}

ConfluenceReport overlap_check(const Presentation& p) {
  ConfluenceReport rep;
  const auto& rules = p.rules();
  auto resolve = [&](std::size_t ra, std::size_t rb, std::size_t offset, const Word& w, bool containment) {
    const Coeff one = p.one();
    NCPoly left = normal_form(p, apply_at(p, w, 0, ra, one));
    NCPoly right = normal_form(p, apply_at(p, w, offset, rb, one));
    CriticalPair cp{ra, rb, offset, containment, w, left - right};
    if (!cp.residual.is_zero()) rep.confluent = false;
    rep.pairs.push_back(std::move(cp));
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& a = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& b = rules[j].lhs;
      // proper overlaps: a suffix of a equals a prefix of b
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k)
        if (a.compare(a.size() - k, k, b, 0, k) == 0) resolve(i, j, a.size() - k, a + b.substr(k), false);
      // containments: b occurs inside a
      if (i != j && b.size() <= a.size())
        for (std::size_t pos = a.find(b); pos != Word::npos; pos = a.find(b, pos + 1)) resolve(i, j, pos, a, true);
    }
  }
  return rep;
}

}  // namespace orepi
