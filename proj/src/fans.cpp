#include "troptoric/fans.hpp"

#include "troptoric/exactalg.hpp"
#include "troptoric/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace troptoric {

namespace {

std::string cone_name(const std::vector<std::size_t>& c) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

RationalMatrix ray_rows(const Fan& fan, const std::vector<std::size_t>& cone) {
    RationalMatrix m(cone.size(), fan.dim);
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (std::size_t j = 0; j < fan.dim; ++j) m.at(i, j) = fan.rays[cone[i]][j];
    return m;
}

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rat det(RationalMatrix m) {
    if (m.rows() != m.cols()) return 0;
    Rat d = 1;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m.at(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

}  // namespace

Fan make_fan(std::size_t dim, std::vector<std::vector<long long>> rays,
             std::vector<std::vector<std::size_t>> cones) {
    Fan fan;
    fan.dim = dim;
    fan.rays = std::move(rays);
    std::set<std::vector<std::size_t>> all;
    all.insert({});
    for (auto c : cones) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        // all subsets are faces of a simplicial cone
        std::size_t k = c.size();
        for (std::size_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(c[b]);
            all.insert(std::move(face));
        }
    }
    fan.cones.assign(all.begin(), all.end());
    std::sort(fan.cones.begin(), fan.cones.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return fan;
}

FanValidation validate(const Fan& fan) {
    FanValidation v;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& r = fan.rays[i];
        if (r.size() != fan.dim) {
            v.fail("ray " + std::to_string(i) + " has wrong dimension");
            continue;
        }
        long long g = 0;
        for (long long x : r) g = gcd_ll(g, x);
        if (g != 1) v.fail("ray " + std::to_string(i) + " is not primitive");
        for (std::size_t j = i + 1; j < fan.rays.size(); ++j)
            if (fan.rays[j] == r) v.fail("rays " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide");
    }
    std::set<std::vector<std::size_t>> listed(fan.cones.begin(), fan.cones.end());
    for (const auto& c : fan.cones) {
        for (auto idx : c)
            if (idx >= fan.rays.size()) v.fail("cone " + cone_name(c) + " uses a missing ray");
        if (!std::is_sorted(c.begin(), c.end()))
            v.fail("cone " + cone_name(c) + " is not sorted");
        if (c.empty()) continue;
        bool bad_ray = false;
        for (auto idx : c) bad_ray |= idx >= fan.rays.size();
        if (bad_ray) continue;
        if (rank(ray_rows(fan, c)) != c.size())
            v.fail("cone " + cone_name(c) + " is not simplicial (dependent rays)");
        // face closure
        std::size_t k = c.size();
        for (std::size_t mask = 0; mask + 1 < (1u << k); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(c[b]);
            if (!listed.count(face))
                v.fail("face " + cone_name(face) + " of cone " + cone_name(c) + " is missing");
        }
    }
    // Distinct cones must not share relative interior points: find
    // x = sum l_i r_i = sum m_j r_j with l, m >= 1 via exact LP.
    for (std::size_t a = 0; a < fan.cones.size(); ++a) {
        for (std::size_t b = a + 1; b < fan.cones.size(); ++b) {
            const auto& ca = fan.cones[a];
            const auto& cb = fan.cones[b];
            if (ca.empty() || cb.empty() || ca == cb) continue;
            std::size_t na = ca.size(), nb = cb.size();
            RationalMatrix sys(fan.dim, na + nb);
            std::vector<Rat> rhs(fan.dim, Rat(0));
            for (std::size_t d = 0; d < fan.dim; ++d) {
                for (std::size_t i = 0; i < na; ++i) sys.at(d, i) = fan.rays[ca[i]][d];
                for (std::size_t j = 0; j < nb; ++j) sys.at(d, na + j) = -Rat(fan.rays[cb[j]][d]);
            }
            // substitute l = 1 + l', m = 1 + m' with l', m' >= 0
            for (std::size_t d = 0; d < fan.dim; ++d) {
                Rat shift = 0;
                for (std::size_t i = 0; i < na; ++i) shift += sys.at(d, i);
                for (std::size_t j = 0; j < nb; ++j) shift += sys.at(d, na + j);
                rhs[d] = -shift;
            }
            if (lp_feasible_point(sys, rhs))
                v.fail("cones " + cone_name(ca) + " and " + cone_name(cb) +
                       " overlap in their relative interiors");
        }
    }
    return v;
}

std::vector<bool> is_smooth(const Fan& fan) {
    std::vector<bool> out;
    out.reserve(fan.cones.size());
    for (const auto& c : fan.cones) {
        if (c.empty()) {
            out.push_back(true);
            continue;
        }
        RationalMatrix m = ray_rows(fan, c);
        std::size_t k = c.size();
        if (k > fan.dim) {
            out.push_back(false);
            continue;
        }
        // gcd over all k x k minors
        std::vector<std::size_t> cols(k);
        std::iota(cols.begin(), cols.end(), 0);
        BigInt g = 0;
        bool more = true;
        while (more) {
            RationalMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(i, cols[j]);
            g = boost::multiprecision::gcd(g, numerator(det(sub)));  // rays integral
            more = false;
            for (std::size_t i = k; i-- > 0;) {
                if (cols[i] != i + fan.dim - k) {
                    ++cols[i];
                    for (std::size_t t = i + 1; t < k; ++t) cols[t] = cols[t - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
        out.push_back(g == 1);
    }
    return out;
}

std::vector<std::size_t> maximal_cones(const Fan& fan) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < fan.cones.size() && maximal; ++j) {
            if (i == j) continue;
            if (fan.cones[i].size() >= fan.cones[j].size()) continue;
            if (std::includes(fan.cones[j].begin(), fan.cones[j].end(), fan.cones[i].begin(),
                              fan.cones[i].end()))
                maximal = false;
        }
        if (maximal && !fan.cones[i].empty()) out.push_back(i);
    }
    return out;
}

std::optional<std::vector<Rat>> barycentric_coordinates(const Fan& fan, std::size_t cone_index,
                                                        const std::vector<Rat>& point) {
    const auto& c = fan.cones.at(cone_index);
    if (point.size() != fan.dim) throw std::invalid_argument("point dimension mismatch");
    RationalMatrix m(fan.dim, c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t d = 0; d < fan.dim; ++d) m.at(d, j) = fan.rays[c[j]][d];
    auto sol = solve(m, point);
    if (!sol) return std::nullopt;
    // simplicial: solution unique when it exists; verify and check sign
    std::vector<Rat> back(fan.dim, Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t d = 0; d < fan.dim; ++d) back[d] += (*sol)[j] * Rat(fan.rays[c[j]][d]);
    if (back != point) return std::nullopt;
    for (const auto& l : *sol)
        if (l < 0) return std::nullopt;
    return sol;
}

std::optional<std::size_t> containing_maximal_cone(const Fan& fan,
                                                   const std::vector<Rat>& point) {
    for (auto ci : maximal_cones(fan))
        if (barycentric_coordinates(fan, ci, point)) return ci;
    return std::nullopt;
}

}  // namespace troptoric
