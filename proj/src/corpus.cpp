#include <collapsible/corpus.hpp>
#include <collapsible/formats.hpp>
#include <collapsible/homology.hpp>
#include <collapsible/iso.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace collapsible {

namespace {

/// "0134 0126" style lists with single-digit vertex ids.
std::vector<Face> digit_faces(std::string_view text)
{
    std::vector<Face> out;
    std::istringstream in{std::string(text)};
    std::string word;
    while (in >> word) {
        std::vector<int> vs;
        for (char c : word)
            vs.push_back(c - '0');
        out.push_back(Face::from_vertices(vs));
    }
    return out;
}

// The 19 tetrahedra of the construction, in the order they are listed.
constexpr std::string_view kGs32 =
    "0134 0126 0167 0257 0567 1245 1345 2457 3456 4567 0256 0137 0347 1256 1356 1367 3467 0124 0247";
constexpr std::string_view kCentral = "0257 0567 1245 1345 2457 3456 4567";

// Frozen output of derive_dunce_hat(); the regeneration test keeps them honest.
constexpr std::string_view kDunceHatLabeled =
    "013 014 017 025 026 027 034 056 124 125 126 135 167 247 346 356 467";
constexpr std::string_view kDunceHatCanonical = "012 013 014 023 045 056 057 067 125 135 146 156 237 245 246 267 357";

// Six-vertex real projective plane (half of the icosahedron).
constexpr std::string_view kRp2 = "013 015 024 025 034 123 124 145 235 345";

std::optional<int> family_index(const std::string& name, std::string_view prefix)
{
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    if (*first == '0' && last - first > 1)
        return std::nullopt;
    int n = 0;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last)
        return std::nullopt;
    return n;
}

[[noreturn]] void unknown(const std::string& name, const std::string& why = {})
{
    std::string msg = "unknown corpus entry '" + name + "'";
    if (!why.empty())
        msg += " (" + why + ")";
    msg += "; available:";
    for (const auto& n : corpus_names())
        msg += " " + n;
    throw UnknownCorpusEntry(msg);
}

CorpusEntry make(std::string name, SimplicialComplex k, std::string note)
{
    std::string hash = content_hash(k);
    return {std::move(name), std::move(k), std::move(note), std::move(hash)};
}

} // namespace

std::vector<Face> gs_32_central_tetrahedra() { return digit_faces(kCentral); }

std::vector<Face> gs_32_red_cone()
{
    auto all = digit_faces(kGs32);
    all.resize(10);
    return all;
}

std::vector<Face> gale_evenness_facets(int n)
{
    if (n < 5 || n > kMaxVertices)
        throw std::invalid_argument("gale_evenness_facets: need 5 <= n <= 64");
    std::vector<Face> out;
    std::vector<int> pick(4);
    // Every 4-subset whose gaps each contain an even number of chosen points between them.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int set[4] = {a, b, c, d};
                    bool ok = true;
                    for (int x = 0; x < n && ok; ++x) {
                        if (x == a || x == b || x == c || x == d)
                            continue;
                        for (int y = x + 1; y < n; ++y) {
                            if (y == a || y == b || y == c || y == d)
                                continue;
                            int between = 0;
                            for (int v : set)
                                between += (x < v && v < y) ? 1 : 0;
                            if (between % 2 != 0) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if (ok)
                        out.push_back(Face{a, b, c, d});
                }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> corpus_names()
{
    return {"gs_32", "ball_B", "dunce_hat_D", "dunce_hat_D_gs32", "rp2_6", "simplex_3", "simplex_boundary_3",
            "cyclic_4_8"};
}

CorpusEntry corpus_entry(const std::string& name)
{
    if (name == "gs_32")
        return make(name, SimplicialComplex::from_facets(digit_faces(kGs32)),
                    "3-sphere with 8 vertices and 19 tetrahedra, labels as constructed");
    if (name == "ball_B") {
        const auto gs = SimplicialComplex::from_facets(digit_faces(kGs32));
        return make(name, gs.remove_facets_generated(digit_faces(kCentral)),
                    "gs_32 without its seven central tetrahedra (closure of the remaining 12)");
    }
    if (name == "dunce_hat_D")
        return make(name, SimplicialComplex::from_facets(digit_faces(kDunceHatCanonical)),
                    "8-vertex dunce hat, canonical labels, frozen from derive_dunce_hat");
    if (name == "dunce_hat_D_gs32")
        return make(name, SimplicialComplex::from_facets(digit_faces(kDunceHatLabeled)),
                    "8-vertex dunce hat as a subcomplex of gs_32 and ball_B");
    if (name == "rp2_6")
        return make(name, SimplicialComplex::from_facets(digit_faces(kRp2)), "6-vertex real projective plane");
    if (auto k = family_index(name, "simplex_boundary_")) {
        if (*k < 1 || *k >= kMaxVertices)
            unknown(name, "need 1 <= N <= 63");
        return make(name, simplex_boundary(*k), "boundary of the simplex on 0..N");
    }
    if (auto k = family_index(name, "simplex_")) {
        if (*k < 0 || *k >= kMaxVertices)
            unknown(name, "need 0 <= N <= 63");
        return make(name, simplex(*k), "simplex on 0..N");
    }
    if (auto k = family_index(name, "cyclic_4_")) {
        if (*k < 5 || *k > 16)
            unknown(name, "need 5 <= N <= 16");
        return make(name, SimplicialComplex::from_facets(gale_evenness_facets(*k)),
                    "boundary of the cyclic 4-polytope, facets by Gale evenness");
    }
    unknown(name);
}

SimplicialComplex corpus(const std::string& name) { return corpus_entry(name).complex; }

DunceHatDerivation derive_dunce_hat(Budget budget)
{
    const auto gs = corpus("gs_32");
    const auto ball = gs.remove_facets_generated(digit_faces(kCentral));
    const auto skel = gs.skeleton(2);

    DunceHatDerivation out;
    out.report = find_stuck_cores(ball, StuckCoreMode{.exhaustive = true, .samples = 0, .up_to_isomorphism = false}, 0, budget);

    // Red solid cone boundary minus 012.
    const auto red = SimplicialComplex::from_facets(gs_32_red_cone());
    std::vector<Face> cone_side = red.boundary_complex().facets();
    std::erase(cone_side, Face{0, 1, 2});

    const StuckCore* chosen = nullptr;
    for (const auto& sc : out.report.cores) {
        const auto& c = sc.core;
        if (c.dim() != 2 || !c.is_pure() || c.num_vertices() != 8 || !free_faces(c).empty())
            continue;
        if (!homology_integral(c, true).trivial() || !c.is_subcomplex_of(skel))
            continue;
        ++out.qualifying_cores;
        if (c.facets() == cone_side && !chosen)
            chosen = &sc;
    }
    if (!chosen) {
        std::string msg = "derive_dunce_hat: no qualifying stuck core of ball_B";
        if (out.report.completeness != Verdict::Yes)
            msg += " (search ran out of budget)";
        throw std::runtime_error(msg);
    }
    out.labeled = chosen->core;
    out.certificate = chosen->certificate;
    out.canonical = SimplicialComplex::from_facets(canonical_form(out.labeled).facets);
    return out;
}

} // namespace collapsible
