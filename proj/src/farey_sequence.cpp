#include "farey/farey_sequence.hpp"

#include <stdexcept>

namespace farey {

void for_each_farey(long n, const std::function<void(std::int64_t, std::int64_t)>& visit) {
  if (n < 1) throw std::domain_error("farey_sequence: order must be >= 1");
  std::int64_t a = 0, b = 1, c = 1, d = n;
  visit(a, b);
  while (c <= d) {
    visit(c, d);
    if (c == 1 && d == 1) break;
    std::int64_t k = (n + b) / d;
    std::int64_t c2 = k * c - a;
    std::int64_t d2 = k * d - b;
    a = c;
    b = d;
    c = c2;
    d = d2;
  }
}

FareySequence::FareySequence(long n) : n_(n) {
  for_each_farey(n, [this](std::int64_t p, std::int64_t q) {
    fractions_.push_back(FareyFraction{p, q});
  });
}

}  // namespace farey
