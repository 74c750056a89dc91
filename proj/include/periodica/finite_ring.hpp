#pragma once

#include "periodica/kernels.hpp"
#include "periodica/numtheory.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace periodica {

using u32 = std::uint32_t;

// Ring with elements indexed 0..size-1, used by the coset machinery.
class UnitRing {
public:
    virtual ~UnitRing() = default;
    virtual u32 size() const = 0;
    virtual u32 one() const = 0;
    virtual u32 mul(u32 x, u32 y) const = 0;
    virtual bool is_unit(u32 x) const = 0;
    // Coefficient vector used for canonical ordering and labels.
    virtual std::vector<u32> coeffs(u32 x) const = 0;
    virtual std::string label(u32 x) const = 0;
    virtual u32 characteristic() const = 0;
};

// F_p[x]/(f); element index is sum c_k p^k.
class FiniteQuotientRing : public UnitRing {
public:
    FiniteQuotientRing(u32 p, std::vector<u32> modulus, std::string variable = "x",
                       kernels::Backend backend = kernels::default_backend());

    u32 size() const override { return size_; }
    u32 one() const override { return 1 % size_; }
    u32 mul(u32 x, u32 y) const override { return mul_[static_cast<std::size_t>(x) * size_ + y]; }
    bool is_unit(u32 x) const override { return inv_[x] != kNone; }
    std::vector<u32> coeffs(u32 x) const override;
    std::string label(u32 x) const override;
    u32 characteristic() const override { return p_; }

    unsigned degree() const { return d_; }
    const std::vector<u32>& modulus() const { return f_; }
    const std::string& variable() const { return var_; }

    // Reduces an arbitrary coefficient vector mod (p, f).
    u32 encode(const std::vector<u32>& coeffs) const;
    u32 scalar(u32 c) const { return encode({c}); }
    u32 add(u32 x, u32 y) const;
    u32 sub(u32 x, u32 y) const;
    u32 neg(u32 x) const;
    u32 inverse(u32 x) const;
    u32 power(u32 x, u64 e) const;
    // Polynomial g(y) evaluated at a ring element.
    u32 evaluate(const std::vector<u32>& g, u32 y) const;

    // Ring automorphism x -> g as a permutation of elements; validated.
    std::vector<u32> automorphism(u32 g) const;

    std::vector<u32> units() const;

    static constexpr u32 kNone = 0xffffffffu;

private:
    u32 p_;
    unsigned d_;
    u32 size_;
    std::vector<u32> f_;
    std::string var_;
    std::vector<u32> mul_;
    std::vector<u32> inv_;
};

// R[j] with j^2 = -1 and j a = sigma(a) j; element index a + |R| b for a + b j.
class CrossedQuaternionRing : public UnitRing {
public:
    CrossedQuaternionRing(std::shared_ptr<const FiniteQuotientRing> base, std::vector<u32> sigma);

    u32 size() const override { return n_ * n_; }
    u32 one() const override { return base_->one(); }
    u32 mul(u32 x, u32 y) const override;
    bool is_unit(u32 x) const override;
    std::vector<u32> coeffs(u32 x) const override;
    std::string label(u32 x) const override;
    u32 characteristic() const override { return base_->characteristic(); }

    const FiniteQuotientRing& base() const { return *base_; }
    u32 make(u32 a, u32 b) const { return a + n_ * b; }
    u32 part_a(u32 x) const { return x % n_; }
    u32 part_b(u32 x) const { return x / n_; }
    // a sigma(a) + b sigma(b), an element of the fixed field of sigma.
    u32 reduced_norm(u32 x) const;

private:
    std::shared_ptr<const FiniteQuotientRing> base_;
    std::vector<u32> sigma_;
    u32 n_;
};

FiniteQuotientRing build_ring(u32 p, const std::vector<u32>& modulus, const std::string& variable = "x");

struct UnitSubgroup {
    std::vector<u32> generators;
    std::vector<u32> elements; // sorted
    bool contains(u32 x) const;
};

UnitSubgroup unit_group(const UnitRing& ring);
UnitSubgroup generate_subgroup(const UnitRing& ring, const std::vector<u32>& generators);

struct DoubleCosetSpace {
    std::vector<u32> representatives;
    std::vector<u32> sizes;
    std::vector<u32> coset_of; // kNone off the units
    u32 unit_count = 0;

    u32 find(u32 x) const { return coset_of.at(x); }
};

// Canonical order: coefficient-wise lexicographic with residues ordered 1 < 2 < ... < p-1 < 0.
// Cosets are listed with the coset of 1 first, then by canonical order of representatives.
bool canonical_less(const UnitRing& ring, u32 x, u32 y);

DoubleCosetSpace double_cosets(const UnitRing& ring, const std::vector<u32>& left_generators,
                               const std::vector<u32>& right_generators);

// N(a + b j) = a^2 + b^2 on F_p[x]/(x^2 + 1).
u32 quaternion_norm(const FiniteQuotientRing& ring, u32 x);

struct NormPartition {
    std::vector<u32> trivial;    // coset indices with square norm
    std::vector<u32> nontrivial; // coset indices with non-square norm
    std::vector<u32> norms;      // norm of each representative
    u32 kernel_size;             // |F_p^x / (F_p^x)^2|
};

NormPartition classify_by_norm_square_class(const FiniteQuotientRing& ring, const DoubleCosetSpace& cosets,
                                            const std::vector<u32>& left_generators,
                                            const std::vector<u32>& right_generators);

struct OrbitPartition {
    std::vector<std::vector<u32>> orbits; // coset indices
    std::vector<u32> coset_map;           // induced permutation of cosets
};

OrbitPartition automorphism_orbit(const FiniteQuotientRing& ring, const DoubleCosetSpace& cosets,
                                  const std::vector<u32>& automorphism, const std::vector<u32>& left_generators,
                                  const std::vector<u32>& right_generators);

} // namespace periodica
