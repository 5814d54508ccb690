#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecshor/errors.hpp"

namespace ecshor {

/// Short-Weierstrass curve y^2 = x^3 + a*x + b over F_p.
struct CurveParams {
    int64_t p = 0;
    int64_t a = 0;
    int64_t b = 0;

    bool operator==(const CurveParams&) const = default;
};

/// Affine point or the point at infinity (group identity).
struct Point {
    bool infinity = true;
    int64_t x = 0;
    int64_t y = 0;

    static Point inf() { return Point{}; }
    static Point at(int64_t x, int64_t y) { return Point{false, x, y}; }

    bool operator==(const Point&) const = default;
};

/// Bijection index x in Z_N <-> point x*G for a generator G of exact order N.
struct SubgroupEncoding {
    CurveParams curve;
    Point generator;
    int order = 0;
    std::vector<Point> table;  // table[x] = x*G

    /// Index of Q in the table; throws NotInSubgroup if absent.
    int index_of(const Point& q) const;
};

struct EcdlpInstance {
    SubgroupEncoding encoding;
    int p_index = 1;
    int q_index = 0;
    std::optional<int> secret_k;
};

int64_t mod_pow(int64_t base, int64_t exp, int64_t m);
int64_t mod_inv_prime_field(int64_t v, int64_t p);

bool is_on_curve(const CurveParams& curve, const Point& pt);
bool is_valid_curve(const CurveParams& curve);

/// Affine chord-tangent group law; Infinity is the identity.
Point point_add(const CurveParams& curve, const Point& p1, const Point& p2);
Point point_negate(const CurveParams& curve, const Point& pt);

/// Double-and-add scalar multiplication, k >= 0.
Point scalar_mul(const CurveParams& curve, int64_t k, const Point& pt);

/// All affine points of the curve plus Infinity, ordered by (x, y) ascending
/// with Infinity first.
std::vector<Point> enumerate_points(const CurveParams& curve);

/// Additive order of a point (smallest m >= 1 with m*P = Infinity).
int point_order(const CurveParams& curve, const Point& pt);

/// Smallest-(x,y) point of exact order N; throws NoSuchSubgroup if none.
/// N = 1 yields Infinity.
Point find_generator_of_order(const CurveParams& curve, int n);

/// Builds the index table x -> x*G; throws OrderMismatch if G's order != N.
SubgroupEncoding build_encoding(const CurveParams& curve, const Point& generator, int n);

/// Classical ground-truth oracle: the unique x with x*G = Q.
int discrete_log_bruteforce(const SubgroupEncoding& enc, const Point& q);

/// Deterministic default curve: the first (p, a, b) with p prime ascending,
/// then a, b ascending, admitting a point of exact order `order`; the
/// generator is the smallest such point. Cached after the first search.
struct DefaultCurve {
    CurveParams curve;
    Point generator;
};
const DefaultCurve& default_curve(int order = 32);

/// Curve fixture JSON: {p, a, b, generator:[x,y], order}. Exact integers.
std::string curve_fixture_json(const SubgroupEncoding& enc);
SubgroupEncoding load_curve_fixture_json(const std::string& text);

}  // namespace ecshor
