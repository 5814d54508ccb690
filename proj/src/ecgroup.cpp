#include "ecshor/ecgroup.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace ecshor {

namespace {

int64_t mod_norm(int64_t v, int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
    int64_t result = 1;
    base = mod_norm(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

int64_t mod_inv_prime_field(int64_t v, int64_t p) {
    // extended Euclid
    int64_t a = mod_norm(v, p), b = p;
    int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw Error("element not invertible in F_p");
    return mod_norm(x0, p);
}

bool is_valid_curve(const CurveParams& c) {
    if (c.p <= 3 || !is_prime(c.p)) return false;
    int64_t disc = mod_norm(4 * mod_pow(c.a, 3, c.p) + 27 * c.b % c.p * c.b, c.p);
    return disc != 0;
}

bool is_on_curve(const CurveParams& c, const Point& pt) {
    if (pt.infinity) return true;
    int64_t lhs = pt.y * pt.y % c.p;
    int64_t rhs = mod_norm(pt.x * pt.x % c.p * pt.x + c.a * pt.x + c.b, c.p);
    return lhs == rhs;
}

Point point_negate(const CurveParams& c, const Point& pt) {
    if (pt.infinity) return pt;
    return Point::at(pt.x, mod_norm(-pt.y, c.p));
}

Point point_add(const CurveParams& c, const Point& p1, const Point& p2) {
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;
    const int64_t p = c.p;
    if (p1.x == p2.x && mod_norm(p1.y + p2.y, p) == 0) return Point::inf();
    int64_t lam;
    if (p1 == p2) {
        lam = mod_norm((3 * p1.x % p * p1.x + c.a) % p * mod_inv_prime_field(2 * p1.y, p), p);
    } else {
        lam = mod_norm((p2.y - p1.y) % p * mod_inv_prime_field(p2.x - p1.x, p), p);
    }
    int64_t x3 = mod_norm(lam * lam - p1.x - p2.x, p);
    int64_t y3 = mod_norm(lam * (p1.x - x3) - p1.y, p);
    return Point::at(x3, y3);
}

Point scalar_mul(const CurveParams& c, int64_t k, const Point& pt) {
    Point acc = Point::inf();
    Point base = pt;
    while (k > 0) {
        if (k & 1) acc = point_add(c, acc, base);
        base = point_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

std::vector<Point> enumerate_points(const CurveParams& c) {
    std::vector<Point> pts;
    pts.push_back(Point::inf());
    for (int64_t x = 0; x < c.p; ++x) {
        int64_t rhs = mod_norm(x * x % c.p * x + c.a * x + c.b, c.p);
        for (int64_t y = 0; y < c.p; ++y) {
            if (y * y % c.p == rhs) pts.push_back(Point::at(x, y));
        }
    }
    return pts;
}

int point_order(const CurveParams& c, const Point& pt) {
    if (pt.infinity) return 1;
    Point q = pt;
    int m = 1;
    while (!q.infinity) {
        q = point_add(c, q, pt);
        ++m;
    }
    return m;
}

Point find_generator_of_order(const CurveParams& c, int n) {
    if (n == 1) return Point::inf();
    for (const Point& pt : enumerate_points(c)) {
        if (pt.infinity) continue;
        if (point_order(c, pt) == n) return pt;
    }
    throw NoSuchSubgroup("no point of exact order " + std::to_string(n));
}

SubgroupEncoding build_encoding(const CurveParams& c, const Point& generator, int n) {
    if (point_order(c, generator) != n)
        throw OrderMismatch("generator order != " + std::to_string(n));
    SubgroupEncoding enc;
    enc.curve = c;
    enc.generator = generator;
    enc.order = n;
    enc.table.resize(n);
    enc.table[0] = Point::inf();
    for (int x = 1; x < n; ++x) enc.table[x] = point_add(c, enc.table[x - 1], generator);
    return enc;
}

int SubgroupEncoding::index_of(const Point& q) const {
    auto it = std::find(table.begin(), table.end(), q);
    if (it == table.end()) throw NotInSubgroup("point not in <P>");
    return static_cast<int>(it - table.begin());
}

int discrete_log_bruteforce(const SubgroupEncoding& enc, const Point& q) {
    return enc.index_of(q);
}

const DefaultCurve& default_curve(int order) {
    static std::mutex mu;
    static std::unordered_map<int, DefaultCurve> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    for (int64_t p = 5;; ++p) {
        if (!is_prime(p)) continue;
        // Hasse: a point of order `order` needs |E| >= order
        if (static_cast<double>(p) + 1 + 2 * std::sqrt(static_cast<double>(p)) < order) continue;
        for (int64_t a = 0; a < p; ++a) {
            for (int64_t b = 0; b < p; ++b) {
                CurveParams c{p, a, b};
                if (!is_valid_curve(c)) continue;
                for (const Point& pt : enumerate_points(c)) {
                    if (pt.infinity) continue;
                    if (point_order(c, pt) == order) {
                        auto [pos, inserted] = cache.emplace(order, DefaultCurve{c, pt});
                        (void)inserted;
                        return pos->second;
                    }
                }
            }
        }
    }
}

std::string curve_fixture_json(const SubgroupEncoding& enc) {
    nlohmann::ordered_json j;
    j["p"] = enc.curve.p;
    j["a"] = enc.curve.a;
    j["b"] = enc.curve.b;
    j["generator"] = {enc.generator.x, enc.generator.y};
    j["order"] = enc.order;
    return j.dump(4) + "\n";
}

SubgroupEncoding load_curve_fixture_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CurveParams c{j.at("p").get<int64_t>(), j.at("a").get<int64_t>(), j.at("b").get<int64_t>()};
    auto gen = j.at("generator");
    Point g = Point::at(gen.at(0).get<int64_t>(), gen.at(1).get<int64_t>());
    return build_encoding(c, g, j.at("order").get<int>());
}

}  // namespace ecshor
