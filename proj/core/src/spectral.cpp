#include "mfcalc/spectral.hpp"

#include <bit>
#include <future>
#include <unordered_map>

#include "mfcalc/error.hpp"

namespace mfcalc {

namespace {

int base_degree(BaseClass b) {
  switch (b) {
    case BaseClass::One: return 0;
    case BaseClass::Omega: return 2;
    case BaseClass::Y: return 3;
    case BaseClass::Z: return 5;
  }
  return 0;
}

std::uint64_t key(BaseClass base, int index, std::uint32_t mask) {
  return (static_cast<std::uint64_t>(base) << 40) |
         (static_cast<std::uint64_t>(index) << 32) | mask;
}

void require_range(int k) {
  if (k < 2 || k > 20) throw DomainError("spectral oracle needs 2 <= k <= 20");
}

}  // namespace

int SpectralBasisElement::degree() const {
  return base_degree(base) + std::popcount(multi_index);
}

std::vector<int> SpectralBasisElement::indices() const {
  std::vector<int> out;
  for (int bit = 0; bit < 32; ++bit) {
    if (multi_index & (1u << bit)) out.push_back(bit + 1);
  }
  return out;
}

std::string SpectralBasisElement::to_string() const {
  std::string x;
  switch (base) {
    case BaseClass::One: x = "1"; break;
    case BaseClass::Omega: x = "w" + std::to_string(index); break;
    case BaseClass::Y: x = "y" + std::to_string(index); break;
    case BaseClass::Z: x = "z"; break;
  }
  std::string t = "t{";
  bool first = true;
  for (int i : indices()) {
    if (!first) t += ",";
    t += std::to_string(i);
    first = false;
  }
  return x + "(x)" + t + "}";
}

std::vector<std::vector<SpectralBasisElement>> spectral_basis(int k) {
  require_range(k);
  const int m = k - 1;
  const std::uint32_t masks = 1u << m;
  std::vector<std::vector<SpectralBasisElement>> basis(static_cast<std::size_t>(k + 5));
  auto push = [&basis](SpectralBlock block, BaseClass base, int index, std::uint32_t mask) {
    SpectralBasisElement e{block, base, index, mask};
    basis[static_cast<std::size_t>(e.degree())].push_back(e);
  };
  for (std::uint32_t mask = 1; mask < masks; ++mask) push(SpectralBlock::B1, BaseClass::One, 0, mask);
  push(SpectralBlock::B2, BaseClass::One, 0, 0);
  for (int i = 1; i <= m; ++i) {
    for (std::uint32_t mask = 0; mask < masks; ++mask) push(SpectralBlock::B2, BaseClass::Omega, i, mask);
  }
  for (int i = 1; i <= m; ++i) {
    for (std::uint32_t mask = 0; mask < masks; ++mask) push(SpectralBlock::B3, BaseClass::Y, i, mask);
  }
  for (std::uint32_t mask = 0; mask < masks; ++mask) push(SpectralBlock::B4, BaseClass::Z, 0, mask);
  return basis;
}

SparseIntMatrix d2_matrix(int k, int degree,
                          const std::vector<std::vector<SpectralBasisElement>>& basis) {
  require_range(k);
  static const std::vector<SpectralBasisElement> empty;
  auto at = [&basis](int d) -> const std::vector<SpectralBasisElement>& {
    if (d < 0 || d >= static_cast<int>(basis.size())) return empty;
    return basis[static_cast<std::size_t>(d)];
  };
  const auto& source = at(degree);
  const auto& target = at(degree + 1);
  std::unordered_map<std::uint64_t, std::size_t> row_of;
  row_of.reserve(target.size());
  for (std::size_t r = 0; r < target.size(); ++r) {
    row_of.emplace(key(target[r].base, target[r].index, target[r].multi_index), r);
  }

  SparseIntMatrix d(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const SpectralBasisElement& x = source[c];
    int sign = 1;
    for (int i : x.indices()) {
      // w_i * x in H^*(N)
      BaseClass product = BaseClass::One;
      int product_index = 0;
      bool nonzero = false;
      if (x.base == BaseClass::One) {
        product = BaseClass::Omega;
        product_index = i;
        nonzero = true;
      } else if (x.base == BaseClass::Y && x.index == i) {
        product = BaseClass::Z;
        nonzero = true;
      }
      if (nonzero) {
        const std::uint32_t mask = x.multi_index & ~(1u << (i - 1));
        d.add(row_of.at(key(product, product_index, mask)), c, sign);
      }
      sign = -sign;
    }
  }
  return d;
}

SpectralReport spectral_e3_report(int k, bool parallel) {
  require_range(k);
  const auto basis = spectral_basis(k);
  const int top = k + 4;
  const auto degrees = static_cast<std::size_t>(top + 1);

  struct DegreeData {
    SparseIntMatrix d;
    std::vector<Integer> divisors;
    std::size_t b3_rank = 0;
  };
  auto compute = [&basis, k](int degree) {
    DegreeData out;
    out.d = d2_matrix(k, degree, basis);
    out.divisors = sparse_elementary_divisors(out.d);
    // d_2 sends B3 into B4 only; restrict columns to B3.
    const auto& source = basis[static_cast<std::size_t>(degree)];
    SparseIntMatrix restricted(out.d.rows(), source.size());
    bool any = false;
    for (std::size_t r = 0; r < out.d.rows(); ++r) {
      for (const auto& [c, v] : out.d.row_data()[r]) {
        if (source[c].block == SpectralBlock::B3) {
          restricted.add(r, c, v);
          any = true;
        }
      }
    }
    if (any) out.b3_rank = sparse_elementary_divisors(restricted).size();
    return out;
  };

  std::vector<DegreeData> data(degrees);
  if (parallel) {
    std::vector<std::future<DegreeData>> jobs;
    for (int d = 0; d <= top; ++d) jobs.push_back(std::async(std::launch::async, compute, d));
    for (std::size_t d = 0; d < degrees; ++d) data[d] = jobs[d].get();
  } else {
    for (int d = 0; d <= top; ++d) data[static_cast<std::size_t>(d)] = compute(d);
  }

  SpectralReport report;
  report.k = k;
  report.d2_squared_zero = true;
  report.torsion_free = true;
  std::vector<Integer> e3(degrees), b4(degrees);
  std::array<std::vector<Integer>, 4> blocks;
  for (auto& b : blocks) b.assign(degrees, 0);

  for (std::size_t d = 0; d < degrees; ++d) {
    SpectralDegree sd;
    sd.degree = static_cast<int>(d);
    sd.e2_rank = basis[d].size();
    sd.d2_out_rank = data[d].divisors.size();
    const std::size_t in_rank = d > 0 ? data[d - 1].divisors.size() : 0;
    sd.e3_rank = sd.e2_rank - sd.d2_out_rank - in_rank;
    if (d > 0) {
      for (const auto& v : data[d - 1].divisors) {
        if (v > 1) sd.e3_torsion.push_back(v);
      }
    }
    if (!sd.e3_torsion.empty()) report.torsion_free = false;
    if (d + 1 < degrees && !(data[d + 1].d * data[d].d).is_zero()) report.d2_squared_zero = false;

    std::size_t b4_count = 0;
    for (const auto& e : basis[d]) {
      ++blocks[static_cast<std::size_t>(e.block)][d];
      if (e.block == SpectralBlock::B4) ++b4_count;
    }
    const std::size_t b3_in = d > 0 ? data[d - 1].b3_rank : 0;
    b4[d] = static_cast<unsigned long>(b4_count - b3_in);
    e3[d] = static_cast<unsigned long>(sd.e3_rank);
    report.degrees.push_back(std::move(sd));
  }
  report.e3_poincare = IntPolynomial(e3);
  for (std::size_t b = 0; b < 4; ++b) report.block_poincare[b] = IntPolynomial(blocks[b]);
  report.b4_quotient = IntPolynomial(b4);
  return report;
}

IntPolynomial spectral_e3_poincare(int k) { return spectral_e3_report(k).e3_poincare; }

}  // namespace mfcalc
