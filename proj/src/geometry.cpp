#include <collapsible/geometry.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace collapsible {

namespace mp = boost::multiprecision;
using Int = mp::cpp_int;

namespace {

int sign_of(const Rational& r) { return r.sign(); }
int sign_of(const Int& r) { return r.sign(); }
int sign_of(__int128 r) { return (r > 0) - (r < 0); }

/// Sign of an integer determinant by fraction-free elimination.
template <class T>
int bareiss_sign(std::vector<std::vector<T>> m)
{
    const std::size_t n = m.size();
    int sign = 1;
    T prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * sign_of(m[n - 1][n - 1]);
}

Rational rational_det(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = m[i][k] / m[k][k];
            if (f != 0)
                for (std::size_t j = k; j < n; ++j)
                    m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

/// Homogeneous integer row (x * L, L) with L the common denominator; positive
/// scaling of a row leaves determinant signs alone.
std::vector<Int> homogeneous(const Point4& p)
{
    Int l = 1;
    for (const auto& c : p)
        l = mp::lcm(l, mp::denominator(c));
    std::vector<Int> row;
    for (const auto& c : p)
        row.push_back(mp::numerator(c) * (l / mp::denominator(c)));
    row.push_back(l);
    return row;
}

/// Sign of det[(p_0,1); ...; (p_4,1)].
class Orienter {
public:
    explicit Orienter(const PointConfig& config)
    {
        small_ = true;
        for (const auto& p : config.points) {
            rows_.push_back(homogeneous(p));
            for (const auto& v : rows_.back())
                small_ = small_ && mp::abs(v) < (Int(1) << 15);
        }
        if (small_)
            for (const auto& r : rows_) {
                std::vector<__int128> s;
                for (const auto& v : r)
                    s.push_back(static_cast<__int128>(static_cast<long long>(v)));
                small_rows_.push_back(std::move(s));
            }
    }

    int operator()(const std::array<int, 5>& idx) const
    {
        if (small_) {
            std::vector<std::vector<__int128>> m;
            for (int i : idx)
                m.push_back(small_rows_[i]);
            return bareiss_sign(std::move(m));
        }
        std::vector<std::vector<Int>> m;
        for (int i : idx)
            m.push_back(rows_[i]);
        return bareiss_sign(std::move(m));
    }

private:
    bool small_ = false;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::vector<__int128>> small_rows_;
};

/// Affine function vanishing on the hyperplane through four points.
Rational hyper(const PointConfig& c, Face f, const Point4& x)
{
    std::vector<std::vector<Rational>> m;
    for (int v : f.vertices()) {
        std::vector<Rational> row(c.points[v].begin(), c.points[v].end());
        row.push_back(1);
        m.push_back(std::move(row));
    }
    std::vector<Rational> row(x.begin(), x.end());
    row.push_back(1);
    m.push_back(std::move(row));
    return rational_det(std::move(m));
}

Point4 centroid(const PointConfig& c, const std::vector<int>& which)
{
    Point4 out{};
    for (int v : which)
        for (int i = 0; i < 4; ++i)
            out[i] += c.points[v][i];
    for (auto& x : out)
        x /= static_cast<int>(which.size());
    return out;
}

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point3 cross(const Point3& a, const Point3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Rational det3(const Point3& a, const Point3& b, const Point3& c, const Point3& d)
{
    return dot(sub(b, a), cross(sub(c, a), sub(d, a)));
}

int orient3(const Point3& a, const Point3& b, const Point3& c, const Point3& d) { return sign_of(det3(a, b, c, d)); }

/// Coordinates of y in the affine frame (b0; b1-b0, b2-b0, b3-b0). y must lie in the frame's span.
Point3 frame_coords(const std::array<Point4, 4>& b, const Point4& y)
{
    // Augmented 4x4 system, three unknowns.
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
    for (int r = 0; r < 4; ++r) {
        for (int j = 0; j < 3; ++j)
            m[r][j] = b[j + 1][r] - b[0][r];
        m[r][3] = y[r] - b[0][r];
    }
    int row = 0;
    std::array<int, 3> pivot_row{};
    for (int col = 0; col < 3; ++col) {
        int p = row;
        while (p < 4 && m[p][col] == 0)
            ++p;
        if (p == 4)
            throw GeometryError("schlegel: degenerate base facet");
        std::swap(m[p], m[row]);
        for (int i = 0; i < 4; ++i)
            if (i != row && m[i][col] != 0) {
                const Rational f = m[i][col] / m[row][col];
                for (int j = col; j < 4; ++j)
                    m[i][j] -= f * m[row][j];
            }
        pivot_row[col] = row++;
    }
    if (m[3][3] != 0)
        throw GeometryError("schlegel: projected point off the base hyperplane");
    Point3 out;
    for (int col = 0; col < 3; ++col)
        out[col] = m[pivot_row[col]][3] / m[pivot_row[col]][col];
    return out;
}

/// Which coordinate plane a nondegenerate planar triangle projects onto bijectively.
int drop_axis(const Point3& normal)
{
    for (int i = 0; i < 3; ++i)
        if (normal[i] != 0)
            return i;
    return 0;
}

using P2 = std::array<Rational, 2>;

P2 flat(const Point3& p, int drop)
{
    P2 out;
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != drop)
            out[k++] = p[i];
    return out;
}

int orient2(const P2& a, const P2& b, const P2& c)
{
    return sign_of((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

bool on_segment2(const P2& a, const P2& b, const P2& p)
{
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
           p[1] <= std::max(a[1], b[1]);
}

bool segments_meet2(const P2& p, const P2& q, const P2& a, const P2& b)
{
    const int o1 = orient2(p, q, a);
    const int o2 = orient2(p, q, b);
    const int o3 = orient2(a, b, p);
    const int o4 = orient2(a, b, q);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && on_segment2(p, q, a)) || (o2 == 0 && on_segment2(p, q, b)) ||
           (o3 == 0 && on_segment2(a, b, p)) || (o4 == 0 && on_segment2(a, b, q));
}

bool in_triangle2(const P2& p, const P2& a, const P2& b, const P2& c)
{
    const int s1 = orient2(a, b, p);
    const int s2 = orient2(b, c, p);
    const int s3 = orient2(c, a, p);
    return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

/// Closed segment pq against closed triangle abc.
bool segment_meets_triangle(const Point3& p, const Point3& q, const Point3& a, const Point3& b, const Point3& c)
{
    const int o1 = orient3(a, b, c, p);
    const int o2 = orient3(a, b, c, q);
    if (o1 * o2 > 0)
        return false;
    if (o1 == 0 && o2 == 0) {
        const int drop = drop_axis(cross(sub(b, a), sub(c, a)));
        const P2 p2 = flat(p, drop), q2 = flat(q, drop), a2 = flat(a, drop), b2 = flat(b, drop), c2 = flat(c, drop);
        return in_triangle2(p2, a2, b2, c2) || in_triangle2(q2, a2, b2, c2) || segments_meet2(p2, q2, a2, b2) ||
               segments_meet2(p2, q2, b2, c2) || segments_meet2(p2, q2, c2, a2);
    }
    const int s1 = orient3(p, q, a, b);
    const int s2 = orient3(p, q, b, c);
    const int s3 = orient3(p, q, c, a);
    return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

bool triangles_meet(const std::array<Point3, 3>& t, const std::array<Point3, 3>& u)
{
    for (int i = 0; i < 3; ++i)
        if (segment_meets_triangle(t[i], t[(i + 1) % 3], u[0], u[1], u[2]) ||
            segment_meets_triangle(u[i], u[(i + 1) % 3], t[0], t[1], t[2]))
            return true;
    return false;
}

/// Intersection of two nondegenerate triangles equals their common face.
bool meet_properly(const GeometricComplex& gc, Face s, Face t)
{
    const Face common = s & t;
    auto pts = [&](Face f) {
        std::array<Point3, 3> out;
        int k = 0;
        for (int v : f.vertices())
            out[k++] = gc.coords[v];
        return out;
    };
    if (common.empty())
        return !triangles_meet(pts(s), pts(t));
    if (common.size() == 1) {
        // Each edge opposite the shared vertex must miss the other triangle.
        const auto a = pts(s);
        const auto b = pts(t);
        auto opposite = [&](Face f) {
            const Face e = f.minus(common);
            return std::array<Point3, 2>{gc.coords[e.min_vertex()], gc.coords[e.max_vertex()]};
        };
        const auto es = opposite(s);
        const auto et = opposite(t);
        return !segment_meets_triangle(es[0], es[1], b[0], b[1], b[2]) &&
               !segment_meets_triangle(et[0], et[1], a[0], a[1], a[2]);
    }
    if (common.size() == 2) {
        const Point3& u = gc.coords[common.min_vertex()];
        const Point3& w = gc.coords[common.max_vertex()];
        const Point3& a = gc.coords[s.minus(common).min_vertex()];
        const Point3& b = gc.coords[t.minus(common).min_vertex()];
        if (orient3(u, w, a, b) != 0)
            return true;
        // Coplanar: the apexes must lie on opposite sides of the shared edge.
        return dot(cross(sub(w, u), sub(a, u)), cross(sub(w, u), sub(b, u))) < 0;
    }
    return false;
}

} // namespace

std::vector<Face> brute_force_facets(const PointConfig& config)
{
    const int n = static_cast<int>(config.points.size());
    if (n < 5 || n > 12)
        throw GeometryError("brute_force_facets: need 5 to 12 points");
    const Orienter orient(config);
    std::vector<Face> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int side = 0;
                    bool facet = true;
                    for (int x = 0; x < n; ++x) {
                        if (x == a || x == b || x == c || x == d)
                            continue;
                        const int s = orient({a, b, c, d, x});
                        if (s == 0)
                            throw GeometryError("brute_force_facets: points " + Face{a, b, c, d, x}.to_string() +
                                                " lie on a common hyperplane");
                        if (side == 0)
                            side = s;
                        else if (s != side)
                            facet = false;
                    }
                    if (facet)
                        out.push_back(Face{a, b, c, d});
                }
    return out;
}

std::optional<Realization> realize_search(const SimplicialComplex& target, std::uint64_t trials, std::uint64_t seed,
                                          BoxSampler sampler)
{
    const int n = target.num_vertices();
    if (target.dim() != 3 || n < 5 || n > 12 || target.vertex_set() != Face((std::uint64_t{1} << n) - 1))
        throw std::invalid_argument("realize_search: target must be a 3-dimensional complex on vertices 0..n-1, n <= 12");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(sampler.lo, sampler.hi);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        PointConfig config;
        for (int i = 0; i < n; ++i)
            config.points.push_back({coord(rng), coord(rng), coord(rng), coord(rng)});
        std::vector<Face> facets;
        try {
            facets = brute_force_facets(config);
        } catch (const GeometryError&) {
            continue;
        }
        if (facets.size() != target.facets().size())
            continue;
        const auto hull = SimplicialComplex::from_facets(facets);
        if (hull.num_vertices() != n)
            continue;
        if (auto iso = are_isomorphic(target, hull))
            return Realization{std::move(config), *iso, trial};
    }
    return std::nullopt;
}

SchlegelProjection schlegel(const PointConfig& config, const std::vector<Face>& facets, Face base)
{
    if (std::find(facets.begin(), facets.end(), base) == facets.end())
        throw GeometryError("schlegel: base " + base.to_string() + " is not a facet");
    std::vector<int> all(config.points.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);
    const Point4 c = centroid(config, all);
    const Point4 bc = centroid(config, base.vertices());

    SchlegelProjection out;
    out.base = base;
    for (Face f : facets)
        if (f != base) {
            out.tetrahedra.push_back(f);
            std::vector<std::vector<Rational>> m;
            for (int v : f.vertices()) {
                std::vector<Rational> row(config.points[v].begin(), config.points[v].end());
                row.push_back(1);
                m.push_back(std::move(row));
            }
            std::vector<Rational> row(c.begin(), c.end());
            row.push_back(1);
            m.push_back(std::move(row));
            out.facet_signs.push_back(sign_of(rational_det(std::move(m))));
        }

    // Points c + t (bc - c) with t = 1 + 2^-k, nearest to t = 2 first.
    const int inside_base = sign_of(hyper(config, base, c));
    std::vector<int> inside;
    for (Face f : out.tetrahedra)
        inside.push_back(sign_of(hyper(config, f, c)));
    bool found = false;
    Rational step = 1;
    for (int k = 0; k < 200 && !found; ++k, step /= 2) {
        const Rational t = 1 + step;
        Point4 x;
        for (int i = 0; i < 4; ++i)
            x[i] = c[i] + t * (bc[i] - c[i]);
        if (sign_of(hyper(config, base, x)) != -inside_base)
            continue;
        bool beneath = true;
        for (std::size_t i = 0; i < out.tetrahedra.size() && beneath; ++i)
            beneath = sign_of(hyper(config, out.tetrahedra[i], x)) == inside[i];
        if (beneath) {
            out.viewpoint = x;
            found = true;
        }
    }
    if (!found)
        throw GeometryError("schlegel: no viewpoint beyond " + base.to_string() + " on the centroid ray");

    const auto bv = base.vertices();
    const std::array<Point4, 4> frame{config.points[bv[0]], config.points[bv[1]], config.points[bv[2]],
                                      config.points[bv[3]]};
    const Rational hx = hyper(config, base, out.viewpoint);
    for (std::size_t v = 0; v < config.points.size(); ++v) {
        const Point4& p = config.points[v];
        Point4 y = p;
        if (!base.contains(static_cast<int>(v))) {
            const Rational s = hx / (hx - hyper(config, base, p));
            for (int i = 0; i < 4; ++i)
                y[i] = out.viewpoint[i] + s * (p[i] - out.viewpoint[i]);
        }
        out.coords.push_back(frame_coords(frame, y));
    }
    return out;
}

Face choose_schlegel_base(const PointConfig& config, const std::vector<Face>& facets)
{
    std::vector<Face> sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    std::optional<Face> best;
    Rational best_min;
    for (std::size_t i = 0; i < std::min<std::size_t>(5, sorted.size()); ++i) {
        const auto proj = schlegel(config, facets, sorted[i]);
        std::optional<Rational> smallest;
        for (Face t : proj.tetrahedra) {
            const auto v = t.vertices();
            const Rational vol = abs(det3(proj.coords[v[0]], proj.coords[v[1]], proj.coords[v[2]], proj.coords[v[3]]));
            if (!smallest || vol < *smallest)
                smallest = vol;
        }
        if (smallest && (!best || *smallest > best_min)) {
            best = sorted[i];
            best_min = *smallest;
        }
    }
    if (!best)
        throw GeometryError("choose_schlegel_base: no facets");
    return *best;
}

bool verify_schlegel(const SchlegelProjection& proj)
{
    if (proj.tetrahedra.size() != proj.facet_signs.size())
        return false;
    const auto bv = proj.base.vertices();
    if (bv.size() != 4)
        return false;
    const Rational base_vol = abs(det3(proj.coords[bv[0]], proj.coords[bv[1]], proj.coords[bv[2]], proj.coords[bv[3]]));
    if (base_vol == 0)
        return false;
    Rational total = 0;
    int relative = 0;
    for (std::size_t i = 0; i < proj.tetrahedra.size(); ++i) {
        const auto v = proj.tetrahedra[i].vertices();
        const Rational vol = det3(proj.coords[v[0]], proj.coords[v[1]], proj.coords[v[2]], proj.coords[v[3]]);
        const int s = sign_of(vol) * proj.facet_signs[i];
        if (s == 0 || (relative != 0 && s != relative))
            return false;
        relative = s;
        total += abs(vol);
    }
    return total == base_vol;
}

GeometricComplex extract_embedding(const SchlegelProjection& proj, const std::vector<Face>& triangles)
{
    GeometricComplex gc;
    gc.coords = proj.coords;
    for (Face t : triangles) {
        bool found = t.is_subset_of(proj.base);
        for (Face cell : proj.tetrahedra)
            found = found || t.is_subset_of(cell);
        if (t.size() != 3 || !found)
            throw GeometryError("extract_embedding: " + t.to_string() + " is not a triangle of the diagram");
        gc.triangles.push_back(t);
    }
    return gc;
}

EmbeddingCheck verify_embedding(const GeometricComplex& gc)
{
    for (Face t : gc.triangles) {
        const auto v = t.vertices();
        if (v.size() != 3 || v.back() >= static_cast<int>(gc.coords.size()))
            return {false, std::pair{t, t}};
        const Point3 n = cross(sub(gc.coords[v[1]], gc.coords[v[0]]), sub(gc.coords[v[2]], gc.coords[v[0]]));
        if (n[0] == 0 && n[1] == 0 && n[2] == 0)
            return {false, std::pair{t, t}};
    }
    for (std::size_t i = 0; i < gc.triangles.size(); ++i)
        for (std::size_t j = i + 1; j < gc.triangles.size(); ++j)
            if (!meet_properly(gc, gc.triangles[i], gc.triangles[j]))
                return {false, std::pair{gc.triangles[i], gc.triangles[j]}};
    return {true, std::nullopt};
}

std::string to_decimal(const Rational& r, int digits)
{
    Int scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const Int num = mp::numerator(r);
    const Int den = mp::denominator(r);
    const bool negative = num < 0;
    // Round half away from zero.
    const Int scaled = (2 * mp::abs(num) * scale + den) / (2 * den);
    std::string s = Int(scaled / scale).str();
    if (digits > 0) {
        std::string frac = Int(scaled % scale).str();
        s += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return (negative && scaled != 0 ? "-" : "") + s;
}

std::string export_off(const GeometricComplex& gc, int decimal_digits)
{
    Face used;
    for (Face t : gc.triangles)
        used = used | t;
    std::map<int, int> index;
    for (int v : used.vertices())
        index.emplace(v, static_cast<int>(index.size()));
    std::set<Face> edges;
    for (Face t : gc.triangles)
        for (Face e : t.subfaces(2))
            edges.insert(e);
    std::ostringstream os;
    os << "OFF\n" << index.size() << ' ' << gc.triangles.size() << ' ' << edges.size() << '\n';
    for (const auto& [v, i] : index) {
        (void)i;
        os << to_decimal(gc.coords[v][0], decimal_digits) << ' ' << to_decimal(gc.coords[v][1], decimal_digits) << ' '
           << to_decimal(gc.coords[v][2], decimal_digits) << '\n';
    }
    for (Face t : gc.triangles) {
        os << 3;
        for (int v : t.vertices())
            os << ' ' << index[v];
        os << '\n';
    }
    return os.str();
}

std::array<std::size_t, 3> off_counts(const std::string& off)
{
    std::istringstream is(off);
    std::string magic;
    std::array<std::size_t, 3> out{};
    if (!(is >> magic) || magic != "OFF" || !(is >> out[0] >> out[1] >> out[2]))
        throw std::invalid_argument("off_counts: not an OFF header");
    return out;
}

std::string write_coordinates(const std::vector<std::vector<Rational>>& points)
{
    std::string out;
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i)
                out += ' ';
            out += mp::numerator(p[i]).str() + "/" + mp::denominator(p[i]).str();
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<Rational>> parse_coordinates(const std::string& text)
{
    std::vector<std::vector<Rational>> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream is(line);
        std::string tok;
        std::vector<Rational> p;
        while (is >> tok) {
            const auto slash = tok.find('/');
            try {
                if (slash == std::string::npos) {
                    p.emplace_back(Int(tok));
                } else {
                    const Int den(tok.substr(slash + 1));
                    if (den == 0)
                        throw std::invalid_argument("zero denominator");
                    p.emplace_back(Int(tok.substr(0, slash)), den);
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_coordinates: bad number '" + tok + "'");
            }
        }
        if (!p.empty())
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace collapsible
