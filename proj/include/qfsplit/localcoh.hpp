/*
   Copyright 2026 The qfsplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QFSPLIT_LOCALCOH_HPP
#define QFSPLIT_LOCALCOH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qfsplit/gf_linalg.hpp"
#include "qfsplit/polynomial.hpp"
#include "qfsplit/verdict.hpp"

namespace qfs {

/// R = k[[x,y,z]]/(z^2 + g) with g in (x, y) k[x, y].
class DoubleCover {
public:
    /// g must live in a two-variable ring and have no constant term; the
    /// third variable is named "z" and must not clash. Throws InvalidArgument.
    explicit DoubleCover(Poly g);

    std::uint32_t p() const noexcept { return g_.ring().p(); }
    const Poly& g() const noexcept { return g_; }
    /// F_p[x, y]
    const RingPtr& base_ring() const noexcept { return g_.ring_ptr(); }
    /// F_p[x, y, z]
    const RingPtr& total_ring() const noexcept { return total_; }
    /// z^2 + g in the total ring.
    Poly equation() const;
    /// g viewed in the total ring.
    Poly g_total() const;

private:
    Poly g_;
    RingPtr total_;
};

/// z^eps / (x^i y^j), i, j >= 1.
struct H2Key {
    unsigned eps = 0;
    std::uint64_t i = 1;
    std::uint64_t j = 1;
    friend auto operator<=>(const H2Key&, const H2Key&) = default;
};

/// Finite F_p-combination of the basis classes of H^2_(x,y)(R).
class H2Class {
public:
    explicit H2Class(std::uint32_t p) : p_(p) {}
    static H2Class basis(std::uint32_t p, H2Key key, std::uint32_t c = 1);

    std::uint32_t p() const noexcept { return p_; }
    const std::map<H2Key, std::uint32_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::uint32_t coefficient(const H2Key& k) const;

    void add(const H2Key& k, std::uint32_t c);
    H2Class& operator+=(const H2Class& b);
    friend H2Class operator+(H2Class a, const H2Class& b) { return a += b; }
    H2Class scaled(std::uint32_t c) const;
    friend bool operator==(const H2Class&, const H2Class&) = default;

private:
    std::uint32_t p_;
    std::map<H2Key, std::uint32_t> terms_;
};

/// Class of numerator / (x^a y^b): z^2 is rewritten as -g until the z-degree
/// is at most 1, then every monomial c x^u y^v z^eps contributes
/// c z^eps / (x^(a-u) y^(b-v)) when both exponents stay positive.
/// The numerator lives in the cover's total ring.
H2Class normal_form(const Poly& numerator, std::uint64_t a, std::uint64_t b, const DoubleCover& cover);

/// Frobenius on H^2: z^eps / (x^i y^j) -> z^(p eps) / (x^(p i) y^(p j)), extended linearly.
H2Class frobenius_h2(const H2Class& xi, const DoubleCover& cover);

/// {z / (x y)}
H2Class socle(const DoubleCover& cover);

/// Rule for splitting N = x^p A + y^p B monomial by monomial.
enum class SplitStrategy {
    XFirst,  ///< monomials divisible by x^p go to A
    YFirst,  ///< monomials divisible by y^p go to B
};

struct CarryResult {
    /// z^p = z^eps N after reduction by z^2 = -g.
    unsigned eps = 0;
    Poly n;
    Poly x_part;  ///< x^p A
    Poly y_part;  ///< y^p B
    /// ((X + Y)^p - X^p - Y^p) / p mod p for the representative lifts X, Y.
    Poly carry;
    /// normal_form(z^(p eps) carry, (p^2, p^2)).
    H2Class eta;
};

/// Second Witt coordinate of {[z]^p / [xy]^p} once the first one vanishes.
/// Throws SocleSurvives when F(socle) != 0 and SplitNotFound when N has a
/// monomial divisible by neither x^p nor y^p.
CarryResult witt_carry(const DoubleCover& cover, SplitStrategy strategy = SplitStrategy::XFirst);
H2Class witt_carry_class(const DoubleCover& cover, SplitStrategy strategy = SplitStrategy::XFirst);

struct MembershipResult {
    bool member = false;
    /// Candidate window 1 <= i, j <= bound of the last solve.
    std::uint64_t bound = 0;
    unsigned escalations = 0;
    /// When member: coefficients of a preimage under Frobenius.
    std::vector<std::pair<H2Key, std::uint32_t>> preimage;
    /// When not member: a functional on basis classes vanishing on the
    /// Frobenius image of every candidate but not on the target.
    std::vector<std::pair<H2Key, std::uint32_t>> witness;
};

inline constexpr unsigned kMaxBoundEscalations = 3;

/// Decides whether eta is F of some class by exact linear algebra over the
/// candidates z^eps / (x^i y^j), 1 <= i, j <= B, with
/// B = ceil((max(p^2, largest index of eta) + deg N + slack) / p),
/// deg N = floor(p / 2) deg g. An infeasible system is retried with B
/// doubled, at most kMaxBoundEscalations times.
MembershipResult frobenius_image_membership(const H2Class& eta, const DoubleCover& cover,
                                            std::uint64_t slack);
bool in_frobenius_image(const H2Class& eta, const DoubleCover& cover);

struct DoubleCoverAnalysis {
    H2Class frobenius_socle{2};
    std::optional<CarryResult> carry;
    std::optional<MembershipResult> membership;
    Verdict verdict;
};

struct DoubleCoverOptions {
    std::uint64_t candidate_slack = 0;  ///< 0 means p
    SplitStrategy strategy = SplitStrategy::XFirst;
};

/// F(socle) != 0 gives height 1; otherwise the carry class decides height 2
/// by non-membership in the Frobenius image.
DoubleCoverAnalysis analyze_doublecover(const DoubleCover& cover, const DoubleCoverOptions& options = {});
Verdict quasi2_doublecover(const DoubleCover& cover);

/// "2*z/(x^3*y) + 1/(x*y)" using the cover's variable names.
std::string to_string(const H2Class& xi, const DoubleCover& cover);
std::string to_string(const H2Key& key, const DoubleCover& cover);

}  // namespace qfs

#endif
