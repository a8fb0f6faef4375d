#include <algorithm>

#include "lsa/catalog.hpp"
#include "lsa/invariants.hpp"

namespace lsa {

namespace {

const SuperDim kClassified[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}};

std::string minus(const char* var, std::size_t n) {
  return n == 0 ? std::string(var) : std::string(var) + "-" + std::to_string(n);
}

std::string pad_name(const std::string& base, SuperDim pad) {
  if (pad == SuperDim{}) return base;
  return base + " + A(" + std::to_string(pad.even) + "|" + std::to_string(pad.odd) + ")";
}

ClassifiedInstance make_instance(std::string family, const LieSuperalgebra& base, SuperDim pad) {
  LieSuperalgebra L = pad == SuperDim{} ? base : direct_sum(base, abelian(pad.even, pad.odd));
  L.set_name(pad_name(base.name(), pad));
  return {std::move(family), base.name(), pad, std::move(L)};
}

}  // namespace

bool is_classified_st(SuperDim st_value) {
  return std::find(std::begin(kClassified), std::end(kClassified), st_value) != std::end(kClassified);
}

const std::vector<StemFamily>& classified_stem_families() {
  static const std::vector<StemFamily> families = {
      {{1, 0}, "(4|0)_2", {4, 0}},  {{1, 0}, "(1|3)_1", {1, 3}},  {{2, 0}, "(5|0)_3", {5, 0}},
      {{2, 0}, "(5|0)_4", {5, 0}},  {{2, 0}, "(5|0)_5", {5, 0}},  {{2, 0}, "(1|4)_7", {1, 4}},
      {{2, 0}, "(2|3)_21", {2, 3}}, {{0, 2}, "(2|2)_1", {2, 2}},  {{0, 2}, "(2|2)_4", {2, 2}},
      {{0, 2}, "(2|3)_18", {2, 3}}, {{0, 2}, "(2|3)_22", {2, 3}}, {{1, 1}, "(2|2)_6", {2, 2}},
      {{1, 1}, "(4|1)_6", {4, 1}},  {{1, 1}, "(3|2)_13", {3, 2}},
  };
  return families;
}

std::string family_label(const std::string& base, SuperDim base_sdim) {
  return base + " + A(" + minus("k", base_sdim.even) + "|" + minus("l", base_sdim.odd) + ")";
}

std::vector<ClassifiedInstance> classify_by_st(SuperDim st_value, SuperDim sdim) {
  if (!is_classified_st(st_value))
    throw UnsupportedError("st " + to_string(st_value) + " is outside the classified set");

  std::vector<ClassifiedInstance> out;
  if (st_value == SuperDim{0, 0}) {
    const std::size_t k = sdim.even;
    const std::size_t l = sdim.odd;
    if (k + l >= 1) {
      LieSuperalgebra A = abelian(k, l);
      out.push_back({"A(k|l)", A.name(), {0, 0}, std::move(A)});
    }
    for (std::size_t m = 0; 2 * m + 1 <= k; ++m)
      for (std::size_t n = 0; n <= l; ++n) {
        if (m + n == 0) continue;
        out.push_back(make_instance("H(m,n) + A(k-2m-1|l-n)", heisenberg_even(m, n), {k - 2 * m - 1, l - n}));
      }
    for (std::size_t m = 1; m <= k && m + 1 <= l; ++m)
      out.push_back(make_instance("H_m + A(k-m|l-m-1)", heisenberg_odd(m), {k - m, l - m - 1}));
  } else {
    for (const auto& family : classified_stem_families()) {
      if (family.st != st_value || !(family.base_sdim <= sdim)) continue;
      out.push_back(make_instance(family_label(family.base, family.base_sdim), catalog::get(family.base).algebra,
                                  sdim - family.base_sdim));
    }
  }

  for (const auto& inst : out) {
    if (inst.algebra.sdim() != sdim || st(inst.algebra) != st_value)
      throw InternalError("classify_by_st: " + inst.algebra.name() + " does not realise st " + to_string(st_value));
  }
  return out;
}

}  // namespace lsa
