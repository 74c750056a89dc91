#include "periodica/finite_ring.hpp"

#include "periodica/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace periodica {

namespace {

constexpr u32 kMaxRingSize = 4096;

std::string poly_label(const std::vector<u32>& c, const std::string& var)
{
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0)
            continue;
        std::string term;
        if (k == 0)
            term = std::to_string(c[k]);
        else
            term = (c[k] == 1 ? std::string() : std::to_string(c[k])) + var + (k > 1 ? "^" + std::to_string(k) : "");
        s += (s.empty() ? "" : "+") + term;
    }
    return s.empty() ? "0" : s;
}

} // namespace

FiniteQuotientRing::FiniteQuotientRing(u32 p, std::vector<u32> modulus, std::string variable,
                                       kernels::Backend backend)
    : p_(p), f_(std::move(modulus)), var_(std::move(variable))
{
    require(is_prime(p), "build_ring: p = " + std::to_string(p) + " is not prime");
    require(p < (1u << 15), "build_ring: p too large");
    require(f_.size() >= 2, "build_ring: modulus must be nonconstant");
    for (auto& c : f_)
        c %= p;
    require(f_.back() == 1, "build_ring: modulus must be monic");
    d_ = static_cast<unsigned>(f_.size() - 1);
    require(d_ <= 64, "build_ring: modulus degree too large");
    u64 sz = 1;
    for (unsigned i = 0; i < d_; ++i) {
        sz *= p;
        require(sz <= kMaxRingSize, "build_ring: ring too large for table construction");
    }
    size_ = static_cast<u32>(sz);

    // Coefficient planes of every element.
    std::vector<u32> planes(static_cast<std::size_t>(d_) * size_);
    for (u32 x = 0; x < size_; ++x) {
        u32 v = x;
        for (unsigned k = 0; k < d_; ++k) {
            planes[static_cast<std::size_t>(k) * size_ + x] = v % p;
            v /= p;
        }
    }
    mul_.assign(static_cast<std::size_t>(size_) * size_, 0);
    std::vector<u32> row(static_cast<std::size_t>(d_) * size_), out(row.size());
    for (u32 x = 0; x < size_; ++x) {
        for (unsigned k = 0; k < d_; ++k)
            std::fill_n(row.begin() + static_cast<std::ptrdiff_t>(k) * size_, size_,
                        planes[static_cast<std::size_t>(k) * size_ + x]);
        kernels::polymul_mod(row.data(), planes.data(), out.data(), size_, p_, f_.data(), d_, backend);
        for (u32 y = 0; y < size_; ++y) {
            u32 v = 0;
            for (unsigned k = d_; k-- > 0;)
                v = v * p_ + out[static_cast<std::size_t>(k) * size_ + y];
            mul_[static_cast<std::size_t>(x) * size_ + y] = v;
        }
    }
    inv_.assign(size_, kNone);
    for (u32 x = 0; x < size_; ++x) {
        if (inv_[x] != kNone)
            continue;
        for (u32 y = 0; y < size_; ++y) {
            if (mul(x, y) == one()) {
                inv_[x] = y;
                inv_[y] = x;
                break;
            }
        }
    }
}

std::vector<u32> FiniteQuotientRing::coeffs(u32 x) const
{
    std::vector<u32> c(d_);
    for (unsigned k = 0; k < d_; ++k) {
        c[k] = x % p_;
        x /= p_;
    }
    return c;
}

std::string FiniteQuotientRing::label(u32 x) const
{
    return poly_label(coeffs(x), var_);
}

u32 FiniteQuotientRing::encode(const std::vector<u32>& c) const
{
    std::vector<u64> r(c.begin(), c.end());
    for (auto& v : r)
        v %= p_;
    for (std::size_t k = r.size(); k-- > d_;) {
        u64 top = r[k];
        r[k] = 0;
        for (unsigned j = 0; j < d_; ++j)
            r[k - d_ + j] = (r[k - d_ + j] + top * ((p_ - f_[j]) % p_)) % p_;
    }
    r.resize(d_, 0);
    u32 v = 0;
    for (unsigned k = d_; k-- > 0;)
        v = v * p_ + static_cast<u32>(r[k]);
    return v;
}

u32 FiniteQuotientRing::add(u32 x, u32 y) const
{
    auto a = coeffs(x), b = coeffs(y);
    for (unsigned k = 0; k < d_; ++k)
        a[k] = (a[k] + b[k]) % p_;
    return encode(a);
}

u32 FiniteQuotientRing::neg(u32 x) const
{
    auto a = coeffs(x);
    for (auto& v : a)
        v = (p_ - v) % p_;
    return encode(a);
}

u32 FiniteQuotientRing::sub(u32 x, u32 y) const
{
    return add(x, neg(y));
}

u32 FiniteQuotientRing::inverse(u32 x) const
{
    require(is_unit(x), "element " + label(x) + " is not a unit");
    return inv_[x];
}

u32 FiniteQuotientRing::power(u32 x, u64 e) const
{
    u32 r = one();
    while (e) {
        if (e & 1)
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

u32 FiniteQuotientRing::evaluate(const std::vector<u32>& g, u32 y) const
{
    u32 v = 0;
    for (std::size_t k = g.size(); k-- > 0;)
        v = add(mul(v, y), scalar(g[k]));
    return v;
}

std::vector<u32> FiniteQuotientRing::automorphism(u32 g) const
{
    require(evaluate(f_, g) == 0, "map x -> " + label(g) + " is not a ring endomorphism");
    std::vector<u32> perm(size_);
    std::vector<bool> hit(size_, false);
    for (u32 x = 0; x < size_; ++x) {
        perm[x] = evaluate(coeffs(x), g);
        require(!hit[perm[x]], "map x -> " + label(g) + " is not bijective");
        hit[perm[x]] = true;
    }
    return perm;
}

std::vector<u32> FiniteQuotientRing::units() const
{
    std::vector<u32> out;
    for (u32 x = 0; x < size_; ++x) {
        if (is_unit(x))
            out.push_back(x);
    }
    return out;
}

CrossedQuaternionRing::CrossedQuaternionRing(std::shared_ptr<const FiniteQuotientRing> base, std::vector<u32> sigma)
    : base_(std::move(base)), sigma_(std::move(sigma)), n_(base_->size())
{
    require(sigma_.size() == n_, "crossed ring: sigma must permute the base ring");
    require(static_cast<u64>(n_) * n_ <= (u64{1} << 24), "crossed ring: too large");
    for (u32 x = 0; x < n_; ++x)
        require(sigma_[sigma_[x]] == x, "crossed ring: sigma must be an involution");
}

u32 CrossedQuaternionRing::mul(u32 x, u32 y) const
{
    const auto& R = *base_;
    u32 a = part_a(x), b = part_b(x), c = part_a(y), d = part_b(y);
    // (a + b j)(c + d j) = (ac - b sigma(d)) + (ad + b sigma(c)) j
    u32 re = R.sub(R.mul(a, c), R.mul(b, sigma_[d]));
    u32 im = R.add(R.mul(a, d), R.mul(b, sigma_[c]));
    return make(re, im);
}

u32 CrossedQuaternionRing::reduced_norm(u32 x) const
{
    const auto& R = *base_;
    u32 a = part_a(x), b = part_b(x);
    return R.add(R.mul(a, sigma_[a]), R.mul(b, sigma_[b]));
}

bool CrossedQuaternionRing::is_unit(u32 x) const
{
    return reduced_norm(x) != 0;
}

std::vector<u32> CrossedQuaternionRing::coeffs(u32 x) const
{
    auto a = base_->coeffs(part_a(x));
    auto b = base_->coeffs(part_b(x));
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string CrossedQuaternionRing::label(u32 x) const
{
    u32 a = part_a(x), b = part_b(x);
    std::string sa = base_->label(a), sb = base_->label(b);
    if (b == 0)
        return sa;
    auto bc = base_->coeffs(b);
    bool scalar_b = std::all_of(bc.begin() + 1, bc.end(), [](u32 v) { return v == 0; });
    std::string jb = scalar_b ? (bc[0] == 1 ? "j" : sb + "j") : "(" + sb + ")j";
    if (a == 0)
        return jb;
    return (sa.find('+') != std::string::npos ? "(" + sa + ")" : sa) + "+" + jb;
}

FiniteQuotientRing build_ring(u32 p, const std::vector<u32>& modulus, const std::string& variable)
{
    return FiniteQuotientRing(p, modulus, variable);
}

bool UnitSubgroup::contains(u32 x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

UnitSubgroup unit_group(const UnitRing& ring)
{
    UnitSubgroup g;
    for (u32 x = 0; x < ring.size(); ++x) {
        if (ring.is_unit(x))
            g.elements.push_back(x);
    }
    return g;
}

UnitSubgroup generate_subgroup(const UnitRing& ring, const std::vector<u32>& generators)
{
    for (u32 g : generators)
        require(g < ring.size() && ring.is_unit(g), "generator " + ring.label(g) + " is not a unit");
    UnitSubgroup s;
    s.generators = generators;
    std::vector<bool> seen(ring.size(), false);
    std::deque<u32> queue{ring.one()};
    seen[ring.one()] = true;
    while (!queue.empty()) {
        u32 x = queue.front();
        queue.pop_front();
        s.elements.push_back(x);
        for (u32 g : generators) {
            u32 y = ring.mul(x, g);
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

bool canonical_less(const UnitRing& ring, u32 x, u32 y)
{
    u32 p = ring.characteristic();
    auto a = ring.coeffs(x), b = ring.coeffs(y);
    for (auto& v : a)
        v = (v + p - 1) % p;
    for (auto& v : b)
        v = (v + p - 1) % p;
    return a < b;
}

DoubleCosetSpace double_cosets(const UnitRing& ring, const std::vector<u32>& left_generators,
                               const std::vector<u32>& right_generators)
{
    for (u32 g : left_generators)
        require(g < ring.size() && ring.is_unit(g), "left generator " + ring.label(g) + " is not a unit");
    for (u32 g : right_generators)
        require(g < ring.size() && ring.is_unit(g), "right generator " + ring.label(g) + " is not a unit");
    DoubleCosetSpace s;
    s.coset_of.assign(ring.size(), FiniteQuotientRing::kNone);
    std::vector<u32> order;
    for (u32 x = 0; x < ring.size(); ++x) {
        if (ring.is_unit(x))
            order.push_back(x);
    }
    s.unit_count = static_cast<u32>(order.size());
    std::sort(order.begin(), order.end(), [&](u32 x, u32 y) { return canonical_less(ring, x, y); });
    for (u32 start : order) {
        if (s.coset_of[start] != FiniteQuotientRing::kNone)
            continue;
        u32 id = static_cast<u32>(s.representatives.size());
        s.representatives.push_back(start);
        u32 count = 0;
        std::deque<u32> queue{start};
        s.coset_of[start] = id;
        while (!queue.empty()) {
            u32 x = queue.front();
            queue.pop_front();
            ++count;
            auto visit = [&](u32 y) {
                if (s.coset_of[y] == FiniteQuotientRing::kNone) {
                    s.coset_of[y] = id;
                    queue.push_back(y);
                }
            };
            for (u32 g : left_generators)
                visit(ring.mul(g, x));
            for (u32 g : right_generators)
                visit(ring.mul(x, g));
        }
        s.sizes.push_back(count);
    }
    // Coset of the identity first, the rest in canonical order of representatives.
    u32 first = s.coset_of[ring.one()];
    if (first != 0) {
        std::vector<u32> ids(s.representatives.size());
        std::iota(ids.begin(), ids.end(), 0u);
        std::rotate(ids.begin(), ids.begin() + first, ids.begin() + first + 1);
        std::vector<u32> rank(ids.size());
        DoubleCosetSpace t;
        for (u32 i = 0; i < ids.size(); ++i) {
            rank[ids[i]] = i;
            t.representatives.push_back(s.representatives[ids[i]]);
            t.sizes.push_back(s.sizes[ids[i]]);
        }
        for (auto& c : s.coset_of) {
            if (c != FiniteQuotientRing::kNone)
                c = rank[c];
        }
        s.representatives = std::move(t.representatives);
        s.sizes = std::move(t.sizes);
    }
    ensure(std::accumulate(s.sizes.begin(), s.sizes.end(), u64{0}) == s.unit_count,
           "double cosets do not partition the unit group");
    return s;
}

u32 quaternion_norm(const FiniteQuotientRing& ring, u32 x)
{
    const auto& f = ring.modulus();
    require(f.size() == 3 && f[0] == 1 && f[1] == 0 && f[2] == 1, "quaternion_norm: ring must be F_p[x]/(x^2+1)");
    u32 p = ring.characteristic();
    auto c = ring.coeffs(x);
    return static_cast<u32>((u64{c[0]} * c[0] + u64{c[1]} * c[1]) % p);
}

NormPartition classify_by_norm_square_class(const FiniteQuotientRing& ring, const DoubleCosetSpace& cosets,
                                            const std::vector<u32>& left_generators,
                                            const std::vector<u32>& right_generators)
{
    u32 p = ring.characteristic();
    require(p % 2 == 1, "norm classes need odd characteristic");
    auto square = [&](u32 n) { return n != 0 && is_quadratic_residue(n, p); };
    for (u32 g : left_generators)
        require(square(quaternion_norm(ring, g)), "left generator " + ring.label(g) + " has non-square norm");
    for (u32 g : right_generators)
        require(square(quaternion_norm(ring, g)), "right generator " + ring.label(g) + " has non-square norm");
    NormPartition part;
    part.kernel_size = 2;
    for (u32 i = 0; i < cosets.representatives.size(); ++i) {
        u32 n = quaternion_norm(ring, cosets.representatives[i]);
        part.norms.push_back(n);
        (square(n) ? part.trivial : part.nontrivial).push_back(i);
    }
    for (u32 x = 0; x < ring.size(); ++x) {
        if (cosets.coset_of[x] == FiniteQuotientRing::kNone)
            continue;
        u32 rep = cosets.representatives[cosets.coset_of[x]];
        ensure(square(quaternion_norm(ring, x)) == square(quaternion_norm(ring, rep)),
               "norm square class is not constant on a double coset");
    }
    return part;
}

OrbitPartition automorphism_orbit(const FiniteQuotientRing& ring, const DoubleCosetSpace& cosets,
                                  const std::vector<u32>& automorphism, const std::vector<u32>& left_generators,
                                  const std::vector<u32>& right_generators)
{
    require(automorphism.size() == ring.size(), "automorphism must permute the ring");
    for (u32 x = 0; x < ring.size(); ++x) {
        for (u32 y = 0; y < ring.size(); ++y) {
            if (automorphism[ring.mul(x, y)] != ring.mul(automorphism[x], automorphism[y]))
                throw ValidationError("action is not multiplicative");
        }
    }
    auto left = generate_subgroup(ring, left_generators);
    auto right = generate_subgroup(ring, right_generators);
    for (u32 g : left_generators)
        require(left.contains(automorphism[g]), "action does not preserve the left subgroup");
    for (u32 g : right_generators)
        require(right.contains(automorphism[g]), "action does not preserve the right subgroup");

    OrbitPartition out;
    std::size_t n = cosets.representatives.size();
    for (u32 i = 0; i < n; ++i)
        out.coset_map.push_back(cosets.coset_of[automorphism[cosets.representatives[i]]]);
    for (u32 x = 0; x < ring.size(); ++x) {
        if (cosets.coset_of[x] != FiniteQuotientRing::kNone)
            ensure(cosets.coset_of[automorphism[x]] == out.coset_map[cosets.coset_of[x]],
                   "induced action is not well defined on double cosets");
    }
    std::vector<bool> seen(n, false);
    for (u32 i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::vector<u32> orbit;
        for (u32 j = i; !seen[j]; j = out.coset_map[j]) {
            seen[j] = true;
            orbit.push_back(j);
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(orbit);
    }
    return out;
}

} // namespace periodica
