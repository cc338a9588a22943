#include "infranil/roots.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace infranil {

namespace {

Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Smallest t >= 0 with 2^-t <= r (r > 0).
unsigned bits_below(const Rational& r) {
    unsigned t = 0;
    Rational v(1);
    while (v > r) {
        v /= 2;
        ++t;
        if (t > 1u << 20) throw CertificationError("RootIsolation", "precision target underflow");
    }
    return t;
}

using CVec = std::vector<std::pair<Rational, Rational>>;

CVec to_cvec(const Polynomial& p) {
    CVec c;
    c.reserve(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) c.emplace_back(p.coeff(k), Rational(0));
    return c;
}

// In-place Taylor shift by a real offset s.
void shift_real(CVec& c, const Rational& s) {
    const int n = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) {
            c[j].first += s * c[j + 1].first;
            c[j].second += s * c[j + 1].second;
        }
}

// In-place Taylor shift by an imaginary offset i*b.
void shift_imag(CVec& c, const Rational& b) {
    const int n = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) {
            const Rational re = c[j + 1].first, im = c[j + 1].second;
            c[j].first += -b * im;
            c[j].second += b * re;
        }
}

// Exact Pellet/Rouche certificate: the closed disk of radius rho around
// (cx, cy) contains exactly m roots when the m-th shifted coefficient
// dominates all others on the boundary.  m = 0 is the exclusion test.
bool pellet_certifies(const Polynomial& q, const Rational& cx, const Rational& cy,
                      const Rational& rho, int m) {
    CVec c = to_cvec(q);
    if (cx != 0) shift_real(c, cx);
    if (cy != 0) shift_imag(c, cy);
    // |b| >= max(|re|, |im|) and |b| <= |re| + |im|.
    Rational lhs = std::max(rabs(c[m].first), rabs(c[m].second));
    if (lhs == 0) return false;
    Rational rho_pow(1);
    Rational rhs(0);
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        if (k == m) {
            lhs *= rho_pow;
        } else {
            rhs += (rabs(c[k].first) + rabs(c[k].second)) * rho_pow;
        }
        rho_pow *= rho;
    }
    return lhs > rhs;
}

std::pair<Rational, Rational> eval_complex(const Polynomial& p, const Rational& x,
                                           const Rational& y) {
    Rational re(0), im(0);
    for (int k = p.degree(); k >= 0; --k) {
        const Rational nre = re * x - im * y + p.coeff(k);
        const Rational nim = re * y + im * x;
        re = nre;
        im = nim;
    }
    return {re, im};
}

Rational dist_sq(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
    return (x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2);
}

bool disks_disjoint(const Rational& x1, const Rational& y1, const Rational& r1, const Rational& x2,
                    const Rational& y2, const Rational& r2) {
    return dist_sq(x1, y1, x2, y2) > (r1 + r2) * (r1 + r2);
}

// Axis-aligned square [x, x+h] x [y, y+h] in the closed upper half-plane.
struct Box {
    Rational x;
    Rational y;
    Rational h;
};

struct CandidateDisk {
    Rational cx;
    Rational cy;
    Rational r;
    bool symmetric = false;  // conjugation-symmetric (cy == 0)
};

CandidateDisk covering_disk(const std::vector<Box>& comp) {
    Rational minx = comp[0].x, maxx = comp[0].x, miny = comp[0].y, maxy = comp[0].y;
    const Rational h = comp[0].h;
    for (const auto& b : comp) {
        minx = std::min(minx, b.x);
        maxx = std::max(maxx, b.x);
        miny = std::min(miny, b.y);
        maxy = std::max(maxy, b.y);
    }
    const Rational w = maxx + h - minx;
    const Rational ht = maxy + h - miny;
    CandidateDisk d;
    d.cx = minx + w / 2;
    d.cy = miny + ht / 2;
    d.r = (w + ht) / 2;
    if (miny > 0 && d.cy - d.r > 0) return d;
    // Touches or dips into the axis: use a conjugation-symmetric disk
    // covering the component and its mirror.
    d.cy = 0;
    d.r = w / 2 + (maxy + h);
    d.symmetric = true;
    return d;
}

struct EngineLimits {
    long expected = 0;
    int max_levels = 512;
    std::optional<Rational> max_emit_radius;
    // When set, emitted disks must stay inside this container disk.
    std::optional<std::array<Rational, 3>> container;
};

// Weyl-style subdivision over the upper half-plane.  Returns one
// representative enclosure per root: is_real for roots on the axis,
// strictly-upper disks for conjugate pairs (mirror not included).
std::vector<RootEnclosure> subdivide_isolate(const Polynomial& q, std::vector<Box> boxes,
                                             const EngineLimits& lim) {
    std::vector<RootEnclosure> found;
    for (int level = 0; level < lim.max_levels; ++level) {
        if (static_cast<long>(found.size()) == lim.expected) return found;
        // Exclusion pass.
        std::vector<Box> alive;
        for (const auto& b : boxes) {
            const Rational cx = b.x + b.h / 2, cy = b.y + b.h / 2;
            const Rational rho = b.h * Rational(3, 4);
            if (!pellet_certifies(q, cx, cy, rho, 0)) alive.push_back(b);
        }
        // Group boxes sharing an edge or corner.
        const int n = static_cast<int>(alive.size());
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (rabs(alive[i].x - alive[j].x) <= alive[i].h &&
                    rabs(alive[i].y - alive[j].y) <= alive[i].h)
                    parent[find(i)] = find(j);
            }
        std::map<int, std::vector<Box>> comps;
        for (int i = 0; i < n; ++i) comps[find(i)].push_back(alive[i]);
        std::vector<std::vector<Box>> comp_list;
        for (auto& [root, vec] : comps) {
            std::sort(vec.begin(), vec.end(), [](const Box& a, const Box& b) {
                return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
            comp_list.push_back(std::move(vec));
        }
        std::sort(comp_list.begin(), comp_list.end(), [](const auto& a, const auto& b) {
            return a[0].x != b[0].x ? a[0].x < b[0].x : a[0].y < b[0].y;
        });

        std::vector<CandidateDisk> disks;
        disks.reserve(comp_list.size());
        for (const auto& comp : comp_list) disks.push_back(covering_disk(comp));

        std::vector<bool> emitted(comp_list.size(), false);
        for (std::size_t ci = 0; ci < comp_list.size(); ++ci) {
            if (static_cast<long>(found.size()) == lim.expected) break;
            const auto& d = disks[ci];
            if (lim.max_emit_radius && d.r > *lim.max_emit_radius) continue;
            if (lim.container) {
                const auto& ct = *lim.container;
                if (ct[2] < d.r) continue;
                if (dist_sq(d.cx, d.cy, ct[0], ct[1]) > (ct[2] - d.r) * (ct[2] - d.r)) continue;
            }
            if (!pellet_certifies(q, d.cx, d.cy, d.r, 1)) continue;
            bool clear = true;
            for (std::size_t cj = 0; cj < comp_list.size() && clear; ++cj) {
                if (cj == ci || emitted[cj]) continue;
                clear = disks_disjoint(d.cx, d.cy, d.r, disks[cj].cx, disks[cj].cy, disks[cj].r);
            }
            for (const auto& e : found) {
                if (!clear) break;
                clear = disks_disjoint(d.cx, d.cy, d.r, e.re, e.im, e.radius);
            }
            if (!clear) continue;
            RootEnclosure e;
            e.re = d.cx;
            e.im = d.cy;
            e.radius = d.r;
            e.is_real = d.symmetric;
            e.factor = q;
            found.push_back(std::move(e));
            emitted[ci] = true;
        }
        if (static_cast<long>(found.size()) == lim.expected) return found;

        // Subdivide the remaining components.
        std::vector<Box> next;
        for (std::size_t ci = 0; ci < comp_list.size(); ++ci) {
            if (emitted[ci]) continue;
            for (const auto& b : comp_list[ci]) {
                const Rational h2 = b.h / 2;
                next.push_back({b.x, b.y, h2});
                next.push_back({b.x + h2, b.y, h2});
                next.push_back({b.x, b.y + h2, h2});
                next.push_back({b.x + h2, b.y + h2, h2});
            }
        }
        boxes = std::move(next);
    }
    throw CertificationError("RootIsolation", "subdivision did not converge");
}

// Power-of-two upper bound on root magnitudes via the Fujiwara bound
// 2 max_k |a_k / a_n|^(1/(n-k)); stays proportional to the largest root
// instead of the largest coefficient.
Rational cauchy_bound_pow2(const Polynomial& q) {
    const int n = q.degree();
    const Rational lead = rabs(q.leading());
    long max_t = 0;
    for (int k = 0; k < n; ++k) {
        const Rational ratio = rabs(q.coeff(k)) / lead;
        if (ratio == 0) continue;
        // smallest t with 2^(t (n-k)) >= ratio
        long t = 0;
        Rational p(1);
        while (p < ratio) {
            for (int j = 0; j < n - k; ++j) p *= 2;
            ++t;
        }
        max_t = std::max(max_t, t);
    }
    return pow2(1 + max_t);
}

// Newton step plus Pellet re-certification at the requested radius;
// refuses moves that could leave the current disk.
bool newton_refine_step(RootEnclosure& e, const Rational& new_rad) {
    if (new_rad >= e.radius) return false;
    const Polynomial& q = e.factor;
    auto [px, py] = eval_complex(q, e.re, e.im);
    auto [dx, dy] = eval_complex(q.derivative(), e.re, e.im);
    const Rational dd = dx * dx + dy * dy;
    if (dd == 0) return false;
    // c - q(c)/q'(c)
    Rational nx = e.re - (px * dx + py * dy) / dd;
    Rational ny = e.im - (py * dx - px * dy) / dd;
    const unsigned bits = bits_below(new_rad) + 8;
    nx = dyadic_round(nx, bits);
    ny = e.is_real ? Rational(0) : dyadic_round(ny, bits);
    // The certified disk must stay inside the old one so the root cannot
    // be swapped for a neighbour.
    const Rational slack = e.radius - new_rad;
    if (dist_sq(nx, ny, e.re, e.im) > slack * slack) return false;
    if (!e.is_real && ny - new_rad <= 0) return false;
    if (!pellet_certifies(q, nx, ny, new_rad, 1)) return false;
    e.re = nx;
    e.im = ny;
    e.radius = new_rad;
    return true;
}

void local_bisect(RootEnclosure& e) {
    std::vector<Box> boxes;
    const Rational r = e.radius;
    if (e.is_real) {
        boxes.push_back({e.re - r, Rational(0), r});
        boxes.push_back({e.re, Rational(0), r});
    } else {
        boxes.push_back({e.re - r, e.im - r, r});
        boxes.push_back({e.re, e.im - r, r});
        boxes.push_back({e.re - r, e.im, r});
        boxes.push_back({e.re, e.im, r});
    }
    EngineLimits lim;
    lim.expected = 1;
    lim.max_emit_radius = r / 2;
    lim.container = std::array<Rational, 3>{e.re, e.im, r};
    auto out = subdivide_isolate(e.factor, std::move(boxes), lim);
    RootEnclosure& g = out[0];
    g.multiplicity = e.multiplicity;
    if (e.is_real && !g.is_real)
        throw CertificationError("RootIsolation", "real root lost its axis certificate");
    e = std::move(g);
}

void refine_upper_or_real(RootEnclosure& e, const Rational& target) {
    while (e.radius > target) {
        if (newton_refine_step(e, std::max(target, e.radius * e.radius))) continue;
        if (newton_refine_step(e, std::max(target, e.radius / 2))) continue;
        local_bisect(e);
    }
}

// Ascending divisors of |n| assembled from its <= 4096-smooth part,
// capped; 1 is always present.
std::vector<Int> smooth_divisors(Int n, std::size_t cap = 512) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> fac;
    for (Int d = 2; d <= 4096 && d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
    }
    if (n > 1 && n <= 4096) fac.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e && divs.size() < cap; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz && divs.size() < cap; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Replaces a real enclosure by the exact rational root when the divisor
// search finds it.
void recognize_rational_root(RootEnclosure& e) {
    if (!e.is_real || e.exact()) return;
    for (const Int& v : smooth_divisors(numerator(e.factor.leading()))) {
        const Rational bound(Int(1), Int(4) * v);
        if (bound < pow2(-64)) break;
        if (e.radius > bound) refine_upper_or_real(e, bound);
        const Rational scaled = e.re * Rational(v);
        const Int u = floor_int(scaled + Rational(1, 2));
        const Rational cand = Rational(u) / Rational(v);
        if (rabs(cand - e.re) > e.radius) continue;
        if (e.factor.eval(cand) == 0) {
            e.re = cand;
            e.im = 0;
            e.radius = 0;
            return;
        }
    }
}

}  // namespace

RootEnclosure RootEnclosure::conjugate() const {
    RootEnclosure c = *this;
    c.im = -c.im;
    return c;
}

void refine_enclosure(RootEnclosure& e, const Rational& target) {
    if (target <= 0) throw DomainError("BadPrecision", "refinement target must be positive");
    if (e.exact() || e.radius <= target) return;
    if (e.im < 0) {
        RootEnclosure rep = e.conjugate();
        refine_upper_or_real(rep, target);
        e = rep.conjugate();
        return;
    }
    refine_upper_or_real(e, target);
}

QInterval modulus_interval(const RootEnclosure& e, const Rational& eps) {
    if (e.exact()) {
        const Rational m = rabs(e.re);
        return QInterval::point(m);
    }
    const Rational csq = e.re * e.re + e.im * e.im;
    auto [lo, hi] = sqrt_bounds(csq, eps);
    Rational l = lo - e.radius;
    if (l < 0) l = 0;
    return {l, hi + e.radius};
}

std::vector<RootEnclosure> isolate_roots(const Polynomial& p, const Rational& precision) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "cannot isolate roots of zero polynomial");
    if (precision <= 0) throw DomainError("BadPrecision", "precision must be positive");
    std::vector<RootEnclosure> all;
    if (p.degree() < 1) return all;

    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Polynomial q = factor;
        if (q.eval(Rational(0)) == 0) {
            q = q.divexact(Polynomial({Rational(0), Rational(1)}));
            RootEnclosure zero;
            zero.re = 0;
            zero.im = 0;
            zero.radius = 0;
            zero.multiplicity = mult;
            zero.is_real = true;
            zero.factor = Polynomial({Rational(0), Rational(1)});
            all.push_back(std::move(zero));
        }
        if (q.degree() == 0) continue;
        if (q.degree() == 1) {
            RootEnclosure e;
            e.re = -q.coeff(0) / q.coeff(1);
            e.im = 0;
            e.radius = 0;
            e.multiplicity = mult;
            e.is_real = true;
            e.factor = q;
            all.push_back(std::move(e));
            continue;
        }
        const long nreal = SturmChain(q).count_all();
        const long npairs = (q.degree() - nreal) / 2;
        const Rational bound = cauchy_bound_pow2(q);
        std::vector<Box> init{{-bound, Rational(0), bound}, {Rational(0), Rational(0), bound}};
        EngineLimits lim;
        lim.expected = nreal + npairs;
        auto reps = subdivide_isolate(q, std::move(init), lim);
        long got_real = 0, got_pairs = 0;
        for (auto& rep : reps) (rep.is_real ? got_real : got_pairs) += 1;
        if (got_real != nreal || got_pairs != npairs)
            throw CertificationError("RootIsolation", "root count mismatch against Sturm");
        for (auto& rep : reps) {
            rep.multiplicity = mult;
            recognize_rational_root(rep);
            if (rep.is_real) {
                all.push_back(rep);
            } else {
                all.push_back(rep);
                all.push_back(rep.conjugate());
            }
        }
    }

    for (auto& e : all) refine_enclosure(e, precision);

    // Cross-factor disjointness: factors are coprime, so refinement
    // separates any remaining overlap.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                RootEnclosure &a = all[i], &b = all[j];
                if (a.exact() && b.exact()) continue;
                if (disks_disjoint(a.re, a.im, a.radius, b.re, b.im, b.radius)) continue;
                if (!a.exact()) refine_enclosure(a, a.radius / 2);
                if (!b.exact()) refine_enclosure(b, b.radius / 2);
                changed = true;
            }
    }

    std::sort(all.begin(), all.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return all;
}

DiskC DiskC::operator+(const DiskC& o) const { return {re + o.re, im + o.im, rad + o.rad}; }

DiskC DiskC::operator-(const DiskC& o) const { return {re - o.re, im - o.im, rad + o.rad}; }

Rational DiskC::center_abs_upper() const { return rabs(re) + rabs(im); }

Rational DiskC::center_abs_lower() const { return std::max(rabs(re), rabs(im)); }

DiskC DiskC::operator*(const DiskC& o) const {
    DiskC out;
    out.re = re * o.re - im * o.im;
    out.im = re * o.im + im * o.re;
    out.rad = center_abs_upper() * o.rad + o.center_abs_upper() * rad + rad * o.rad;
    return out;
}

DiskC DiskC::recip() const {
    const Rational lb = center_abs_lower();
    if (lb <= rad)
        throw CertificationError("DiskDivision", "disk reciprocal: zero not excluded");
    const Rational nsq = re * re + im * im;
    DiskC out;
    out.re = re / nsq;
    out.im = -im / nsq;
    out.rad = rad / (lb * (lb - rad));
    return out;
}

DiskC eval_poly_disk(const Polynomial& p, const DiskC& z) {
    DiskC acc = DiskC::point(Rational(0));
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * z + DiskC::point(p.coeff(k));
    }
    return acc;
}

std::optional<Int> disk_unique_integer(const DiskC& d) {
    if (rabs(d.im) > d.rad) return std::nullopt;  // must allow a real value
    const Int lo = ceil_int(d.re - d.rad);
    const Int hi = floor_int(d.re + d.rad);
    if (lo != hi) return std::nullopt;
    return lo;
}

}  // namespace infranil
