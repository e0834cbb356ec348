#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclecert {

/// Deterministic primality check by trial division. Inputs are desk-scale
/// primes, so nothing fancier is warranted.
bool is_prime(std::int64_t p);

/// Element of a prime field F_p. Value is always reduced to [0, p).
struct Fp {
  std::int64_t p = 0;
  std::int64_t v = 0;

  Fp() = default;
  Fp(std::int64_t p_, std::int64_t v_);

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  Fp inv() const;
  Fp pow(std::int64_t e) const;
  bool operator==(const Fp& o) const { return p == o.p && v == o.v; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
};

/// Packed element of an extension field: sum c_i p^i with digits c_i in
/// [0, p). Packing keeps elements hashable and enumerable (codes run over
/// [0, p^k)), which the fiber-counting and enumeration loops depend on.
using ffelem_t = std::uint64_t;

/// F_{p^k} = F_p[x]/(m) for a monic irreducible m of degree k.
///
/// Element operations come in two flavours: the packed API (ffelem_t in,
/// ffelem_t out) used everywhere, and unpacked-buffer kernels (u_*) used by
/// the curve-arithmetic hot loops to avoid repacking between steps.
class ExtField {
 public:
  static constexpr std::uint64_t kDefaultEnumBound = 1ull << 26;
  static constexpr int kMaxDegree = 40;

  /// modulus has length k+1, leading coefficient 1, entries in [0, p).
  ExtField(std::int64_t p, int k, std::vector<std::int64_t> modulus);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return mod_; }

  ffelem_t zero() const { return 0; }
  ffelem_t one() const { return k_ == 0 ? 0 : 1; }
  ffelem_t from_int(std::int64_t c) const;
  /// The class of x (generator of the residue ring).
  ffelem_t gen() const;

  bool is_zero(ffelem_t a) const { return a == 0; }
  ffelem_t add(ffelem_t a, ffelem_t b) const;
  ffelem_t sub(ffelem_t a, ffelem_t b) const;
  ffelem_t neg(ffelem_t a) const;
  ffelem_t mul(ffelem_t a, ffelem_t b) const;
  ffelem_t inv(ffelem_t a) const;
  ffelem_t pow(ffelem_t a, std::uint64_t e) const;

  std::vector<std::int64_t> unpack(ffelem_t a) const;
  ffelem_t pack(const std::vector<std::int64_t>& c) const;
  std::string to_string(ffelem_t a) const;

  bool operator==(const ExtField& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }
  bool operator!=(const ExtField& o) const { return !(*this == o); }

  // Unpacked kernels. Buffers hold k digits (callers size them kMaxDegree).
  void u_unpack(ffelem_t a, std::int64_t* out) const;
  ffelem_t u_pack(const std::int64_t* a) const;
  void u_add(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;
  void u_sub(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;
  void u_neg(const std::int64_t* a, std::int64_t* out) const;
  void u_mul(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;
  void u_inv(const std::int64_t* a, std::int64_t* out) const;
  bool u_is_zero(const std::int64_t* a) const;

  std::int64_t inv_mod_p(std::int64_t a) const;

 private:
  std::int64_t p_ = 0;
  int k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::int64_t> mod_;
  std::vector<std::uint64_t> ppow_;      // p^0 .. p^k
  std::vector<std::int64_t> inv_table_;  // inverses mod p when p is small
};

/// Builds F_{p^k} with the deterministically chosen modulus: the first monic
/// irreducible of degree k in lexicographic order on the coefficient tuple
/// (c_{k-1}, ..., c_0). Rejects composite p and p^k above the bound.
ExtField make_ext_field(std::int64_t p, int k,
                        std::uint64_t enum_bound = ExtField::kDefaultEnumBound);

}  // namespace cyclecert
