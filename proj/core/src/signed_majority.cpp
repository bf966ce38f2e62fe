#include "casim/signed_majority.hpp"

namespace casim {

const std::array<Offset, 5>& SignedMajorityCodec::neighborhood() {
  static const std::array<Offset, 5> v{
      Offset{0, 0}, Offset{0, 1}, Offset{1, 0}, Offset{0, -1}, Offset{-1, 0}};
  return v;
}

State SignedMajorityCodec::make(int inner, const std::array<int, 5>& signs) {
  State s = inner > 0 ? 1u : 0u;
  for (std::size_t j = 0; j < 5; ++j)
    if (signs[j] > 0) s |= 1u << (1 + j);
  return s;
}

std::size_t SignedMajorityCodec::opposite(std::size_t j) {
  static constexpr std::size_t opp[5] = {0, 3, 4, 1, 2};
  return opp[j];
}

CARule signed_majority() {
  using C = SignedMajorityCodec;
  std::vector<std::string> names(C::kStateCount);
  for (State s = 0; s < C::kStateCount; ++s) {
    std::string n(6, '-');
    n[0] = C::inner(s) > 0 ? '+' : '-';
    for (std::size_t j = 0; j < 5; ++j) n[1 + j] = C::sign(s, j) > 0 ? '+' : '-';
    names[s] = n;
  }

  std::vector<Offset> nbhd(C::neighborhood().begin(), C::neighborhood().end());
  auto local = [](std::span<const State> w) -> State {
    const State me = w[0];
    int sum = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      // w_{zz'} = S(z)(z'-z) * S(z')(z-z'); for j = 0 this is +1, so the
      // cell's own inner value always counts positively.
      const int weight =
          C::sign(me, j) * C::sign(w[j], C::opposite(j));
      sum += weight * C::inner(w[j]);
    }
    const State alpha = sum > 0 ? 1u : 0u;
    return (me & ~1u) | alpha;
  };
  return CARule(2, std::move(names), std::move(nbhd), CARule::LocalFn(local));
}

}  // namespace casim
