#include "mfcalc/bundle.hpp"

#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {

FramingBit framing_bit(int b) {
  if (b != 0 && b != 1) {
    throw DomainError("framing bit must be 0 or 1, got " + std::to_string(b));
  }
  return static_cast<FramingBit>(b);
}

void CircleBundle::validate() const {
  if (total.dim() != base.dim() + 1) {
    throw DomainError("circle bundle needs dim total = dim base + 1");
  }
  if (is_simply_connected(total) && !euler_primitive) {
    throw DomainError("a simply connected total space needs a primitive Euler class");
  }
}

FramingBit epsilon_of_base(const ManifoldExpr& base) {
  return w2_nonzero(base) ? FramingBit::Zero : FramingBit::One;
}

FramingBit flip(FramingBit epsilon, bool w2_nonzero) {
  if (epsilon == FramingBit::One) return FramingBit::Zero;
  return w2_nonzero ? FramingBit::Zero : FramingBit::One;
}

ManifoldExpr tunnel_sum(const ManifoldExpr& m, FramingBit epsilon,
                        const ManifoldExpr& n, FramingBit delta) {
  std::string violated;
  auto note = [&violated](const std::string& what) {
    if (!violated.empty()) violated += "; ";
    violated += what;
  };
  if (!is_simply_connected(m)) note("M is not simply connected");
  if (m.dim() < 5) note("dim M < 5");
  if (n.dim() != m.dim() - 1) note("dim N != dim M - 1");
  if (!violated.empty()) throw DomainError("tunnel sum hypothesis violated: " + violated);

  const bool w2m = w2_nonzero(m);
  if (delta == FramingBit::One) {
    // Twisting both frames turns delta into 0 and moves epsilon by flip.
    epsilon = flip(epsilon, w2m);
    delta = FramingBit::Zero;
  }
  FramingIndex index = epsilon == delta ? FramingIndex::Zero : FramingIndex::One;
  if (w2m) index = FramingIndex::Zero;
  return connected_sum(m, suspend(n, index));
}

ManifoldExpr pullback_total(const ManifoldExpr& e, const ManifoldExpr& b,
                            const ManifoldExpr& n) {
  std::string violated;
  auto note = [&violated](const std::string& what) {
    if (!violated.empty()) violated += "; ";
    violated += what;
  };
  if (e.dim() != b.dim() + 1) note("dim E != dim B + 1");
  if (n.dim() != b.dim()) note("dim N != dim B");
  if (!is_simply_connected(e)) note("E is not simply connected");
  if (e.dim() < 5) note("dim E < 5");
  if (!violated.empty()) throw DomainError("tunnel sum hypothesis violated: " + violated);
  // The fibre over a point of B carries its canonical frame, so delta = 0.
  return tunnel_sum(e, epsilon_of_base(b), n, FramingBit::Zero);
}

ManifoldExpr pullback_total(const CircleBundle& bundle, const ManifoldExpr& n) {
  bundle.validate();
  return pullback_total(bundle.total, bundle.base, n);
}

}  // namespace mfcalc
