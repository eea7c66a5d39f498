#pragma once

// Tutte polynomial by the corank-nullity subset sum
//   T(M;x,y) = sum over A of (x-1)^(r(M)-r(A)) (y-1)^(|A|-r(A)).

#include <cstdint>
#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcat/matroid.hpp"

namespace gcat {

struct TuttePolynomial {
  std::map<std::pair<int, int>, long long> coeff;  // (x-degree, y-degree) -> coefficient

  friend bool operator==(const TuttePolynomial& a, const TuttePolynomial& b) = default;

  // Descending x-degree first, ascending y-degree within; integer
  // coefficients.
  std::string to_string() const {
    if (coeff.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, long long>> terms(coeff.begin(), coeff.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      if (a.first.first != b.first.first) return a.first.first > b.first.first;
      return a.first.second < b.first.second;
    });
    std::string out;
    for (auto& [deg, c] : terms) {
      if (c == 0) continue;
      auto [dx, dy] = deg;
      std::string term;
      if ((c != 1 && c != -1) || (dx == 0 && dy == 0)) term += std::to_string(c < 0 ? -c : c);
      if (dx > 0) term += "x" + (dx > 1 ? "^" + std::to_string(dx) : "");
      if (dy > 0) term += "y" + (dy > 1 ? "^" + std::to_string(dy) : "");
      if (out.empty())
        out += (c < 0 ? "-" : "") + term;
      else
        out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }
};

inline TuttePolynomial tutte_subset_sum(const Matroid& m) {
  const int n = m.ground_size();
  const int r = m.rank();
  // binomial expansion of (x-1)^p (y-1)^q accumulated per subset class
  std::map<std::pair<int, int>, long long> by_class;  // (corank, nullity) -> count
  for_each_subset(m.ground(), [&](ElemSet a) {
    int ra = m.rank(a);
    by_class[{r - ra, a.size() - ra}] += 1;
  });
  TuttePolynomial t;
  for (auto& [pq, count] : by_class) {
    auto [p, q] = pq;
    for (int i = 0; i <= p; ++i)
      for (int j = 0; j <= q; ++j) {
        long long c = count * static_cast<long long>(binomial(p, i)) *
                      static_cast<long long>(binomial(q, j));
        if ((p - i + q - j) % 2 == 1) c = -c;
        t.coeff[{i, j}] += c;
      }
  }
  std::erase_if(t.coeff, [](const auto& kv) { return kv.second == 0; });
  return t;
}

}  // namespace gcat
