#include "strata/constructions.hpp"

#include <mutex>
#include <sstream>

namespace strata {

void validate_bundle(const BundleSpec& s) {
    for (auto* c : {&s.m, &s.e, &s.e2}) {
        if (!*c) throw ValidationError("bundle model is missing");
        (*c)->validate();
    }
    s.attach.validate();
    s.reattach.validate();
    if (s.attach.domain() != s.e || s.attach.codomain() != s.m) throw ValidationError("attach must be a map E -> M");
    if (s.reattach.domain() != s.e || s.reattach.codomain() != s.e2) throw ValidationError("reattach must be a map E -> E'");
}

FilteredSpace build_filtered_space(const BundleSpec& s) {
    validate_bundle(s);
    const Poset P = Poset::chain(2);
    const SimplexSub& seg = canonical_simplex(P, {0, 1});
    const SimplexSub& v0 = canonical_simplex(P, {0});
    const SimplexSub& v1 = canonical_simplex(P, {1});
    const std::vector<int> at0{0}, at1{1};
    FilteredMap i0 = simplex_operator(v0, seg, at0), i1 = simplex_operator(v1, seg, at1);
    Product z = tensor(seg.complex, s.e, s.e->dim() + 1);
    Product e0 = tensor(v0.complex, s.e, s.e->dim());
    Product e1 = tensor(v1.complex, s.e, s.e->dim());
    auto m0 = constant_color(s.m, P, 0, "m.");
    auto r1 = constant_color(s.e2, P, 1, "r.");
    auto leg = [](const Product& end, const FilteredMap& f, const ComplexPtr& cod) {
        std::vector<SimplexRef> im;
        for (auto& [a, b] : end.parts) im.push_back(f.apply(b));
        return FilteredMap(end.complex, cod, std::move(im));
    };
    Pushout cyl = pushout(tensor_map(e0, z, &i0, nullptr), leg(e0, s.attach, m0), "c.");
    Pushout full = pushout(compose(cyl.from_x, tensor_map(e1, z, &i1, nullptr)), leg(e1, s.reattach, r1));
    FilteredSpace out;
    out.complex = full.complex;
    out.singular = compose(full.from_x, cyl.from_y);
    out.regular = full.from_y;
    out.cylinder = compose(full.from_x, cyl.from_x);
    out.complex->validate();
    return out;
}

SpiDiagram assemble_spi(const BundleSpec& s, int n) {
    validate_bundle(s);
    return assemble_spi_from_bundle(s.m, s.e, s.e2, s.attach, s.reattach, n);
}

ComplexPtr plain_circle(int n) {
    if (n < 3) throw Error("a circle needs at least three vertices");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return graph_complex(Poset::point(), names, ColorWord(n, 0), edges);
}

FilteredMap circle_cover(int n, int k) {
    const int total = n * k;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < total; ++j) names.push_back("w" + std::to_string(j));
    for (int j = 0; j < total; ++j) {
        const int a = j, b = (j + 1) % total;
        if (a % n < b % n)
            edges.push_back({a, b});
        else
            edges.push_back({b, a});
    }
    auto cover = graph_complex(Poset::point(), names, ColorWord(total, 0), edges);
    auto base = plain_circle(n);
    VertexIndex idx(base);
    const auto& verts = base->of_dim(0);
    return map_from_vertices(cover, idx, [&](int v) { return verts[std::stoi(cover->gen(v).name.substr(1)) % n]; });
}

Subcomplex stratum(const ComplexPtr& x, int q) {
    std::vector<bool> keep(x->size());
    for (int g = 0; g < x->size(); ++g) {
        const auto& c = x->gen(g).color;
        keep[g] = std::all_of(c.begin(), c.end(), [&](int t) { return t == q; });
    }
    return induced_subcomplex(x, keep);
}

namespace {

BundleSpec circle_spec(int cover) {
    BundleSpec s;
    s.attach = cover == 1 ? identity_map(plain_circle(3)) : circle_cover(3, cover);
    s.m = s.attach.codomain();
    s.e = s.attach.domain();
    s.e2 = s.e;
    s.reattach = identity_map(s.e);
    return s;
}

// torus C_{3k} × C_3 over the circle C_3 through the first factor and the k-fold cover
BundleSpec torus_spec(int cover) {
    BundleSpec s;
    FilteredMap down = cover == 1 ? identity_map(plain_circle(3)) : circle_cover(3, cover);
    s.m = down.codomain();
    ComplexPtr first = down.domain();
    Product t = plain_product(first, plain_circle(3), 2);
    s.e = t.complex;
    s.e2 = first;
    s.reattach = t.project_left();
    s.attach = compose(down, s.reattach);
    return s;
}

ComplexPtr pinched_torus() {
    // singular vertex s coned over both boundary circles of an annulus
    std::vector<std::string> names{"s", "a0", "a1", "a2", "b0", "b1", "b2"};
    ColorWord colors{0, 1, 1, 1, 1, 1, 1};
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 3; ++i) {
        const int a = 1 + i, an = 1 + (i + 1) % 3, b = 4 + i, bn = 4 + (i + 1) % 3;
        facets.push_back({a, an, bn});
        facets.push_back({a, b, bn});
        facets.push_back({0, a, an});
        facets.push_back({0, b, bn});
    }
    return ordered_complex(Poset::chain(2), names, colors, facets);
}

ComplexPtr glued_spheres() {
    // two suspensions of a triangle sharing their poles n and s
    std::vector<std::string> names{"n", "s", "a0", "a1", "a2", "b0", "b1", "b2"};
    ColorWord colors{0, 0, 1, 1, 1, 1, 1, 1};
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 3; ++i)
        for (int ring : {2, 5}) {
            const int x = ring + i, y = ring + (i + 1) % 3;
            facets.push_back({0, x, y});
            facets.push_back({1, x, y});
        }
    return ordered_complex(Poset::chain(2), names, colors, facets);
}

ComplexPtr torus7() {
    std::vector<std::string> names;
    for (int i = 0; i < 7; ++i) names.push_back("t" + std::to_string(i));
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return ordered_complex(Poset::point(), names, ColorWord(7, 0), facets);
}

ExampleRecord bundle_example(std::string name, std::string description, BundleSpec spec,
                             std::vector<std::pair<std::string, std::string>> expected) {
    ExampleRecord r;
    r.name = std::move(name);
    r.description = std::move(description);
    r.complex = build_filtered_space(spec).complex;
    r.bundle = std::move(spec);
    r.expected = std::move(expected);
    return r;
}

std::vector<ExampleRecord> build_examples() {
    std::vector<ExampleRecord> out;
    out.push_back(bundle_example("cylinder", "annulus with one boundary circle as the singular stratum", circle_spec(1),
                                 {{"counts", "6/12/6"},
                                  {"euler", "0"},
                                  {"stratum p0 pi1", "[0]"},
                                  {"stratum p1 pi1", "[0]"},
                                  {"spi1 [p0,p1]", "[0]"},
                                  {"spi1 d1 cokernel", "[]"},
                                  {"spi1 d0 cokernel", "[]"}}));
    out.push_back(bundle_example("moebius", "Moebius strip with its core circle as the singular stratum", circle_spec(2),
                                 {{"counts", "9/21/12"},
                                  {"euler", "0"},
                                  {"stratum p0 pi1", "[0]"},
                                  {"stratum p1 pi1", "[0]"},
                                  {"spi1 [p0,p1]", "[0]"},
                                  {"spi1 d1 cokernel", "[2]"},
                                  {"spi1 d0 cokernel", "[]"}}));
    out.push_back(ExampleRecord{"pinched_torus", "annulus with both boundary circles coned to one singular point",
                                pinched_torus(), std::nullopt,
                                {{"counts", "7/18/12"},
                                 {"euler", "1"},
                                 {"stratum p0 vertices", "1"},
                                 {"spi0", "[p0]:1 [p1]:1 [p0,p1]:2"}}});
    out.push_back(ExampleRecord{"glued_spheres", "two spheres glued along their poles, the poles singular", glued_spheres(),
                                std::nullopt,
                                {{"counts", "8/18/12"},
                                 {"euler", "2"},
                                 {"stratum p0 vertices", "2"},
                                 {"spi0", "[p0]:2 [p1]:2 [p0,p1]:4"}}});
    out.push_back(bundle_example("solid_torus_pair_a", "trivial circle bundle over the singular circle", torus_spec(1),
                                 {{"euler", "0"},
                                  {"stratum p0 pi1", "[0]"},
                                  {"spi1 [p0,p1]", "[0,0]"},
                                  {"spi1 d1 cokernel", "[]"},
                                  {"spi1 d1 kernel", "[0]"},
                                  {"spi1 d0 cokernel", "[]"}}));
    out.push_back(bundle_example("solid_torus_pair_b", "circle bundle over the doubly covered singular circle", torus_spec(2),
                                 {{"euler", "0"},
                                  {"stratum p0 pi1", "[0]"},
                                  {"spi1 [p0,p1]", "[0,0]"},
                                  {"spi1 d1 cokernel", "[2]"},
                                  {"spi1 d1 kernel", "[0]"},
                                  {"spi1 d0 cokernel", "[]"}}));
    out.push_back(ExampleRecord{"torus7", "seven-vertex torus", torus7(), std::nullopt,
                                {{"counts", "7/21/14"}, {"euler", "0"}, {"pi1", "[0,0]"}}});
    out.push_back(ExampleRecord{"circle3", "three-vertex circle", plain_circle(3), std::nullopt,
                                {{"counts", "3/3"}, {"euler", "0"}, {"pi1", "[0]"}}});
    out.push_back(ExampleRecord{"horn-p0p0p1-1", "the horn of [p0,p0,p1] at 1", horn(Poset::chain(2), {0, 0, 1}, 1),
                                std::nullopt, {{"counts", "3/2"}, {"fibrant", "no"}}});
    out.push_back(ExampleRecord{"delta-p0p1", "the simplex [p0,p1]", standard_simplex(Poset::chain(2), {0, 1}), std::nullopt,
                                {{"counts", "2/1"}, {"sd counts", "4/3"}}});
    out.push_back(ExampleRecord{"delta-p", "the simplex [p]", standard_simplex(Poset::point(), {0}), std::nullopt,
                                {{"counts", "1"}, {"fibrant", "yes"}}});
    out.push_back(ExampleRecord{"nerve-p0p1", "the nerve of p0 < p1", nerve(Poset::chain(2)), std::nullopt,
                                {{"counts", "2/1"}, {"fibrant", "yes"}}});
    out.push_back(ExampleRecord{"delta-p0p0p1", "the simplex [p0,p0,p1]", standard_simplex(Poset::chain(2), {0, 0, 1}),
                                std::nullopt, {{"counts", "3/3/1"}, {"fibrant", "no"}}});
    return out;
}

std::mutex examples_mu;

const std::vector<ExampleRecord>& all_examples() {
    static std::vector<ExampleRecord> examples;
    std::lock_guard<std::mutex> lock(examples_mu);
    if (examples.empty()) examples = build_examples();
    return examples;
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> out;
    for (auto& e : all_examples()) out.push_back(e.name);
    return out;
}

const ExampleRecord& example(const std::string& name) {
    for (auto& e : all_examples())
        if (e.name == name) return e;
    throw Error("unknown example '" + name + "'");
}

namespace {

std::string join_counts(const std::vector<int>& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) out += (i ? "/" : "") + std::to_string(c[i]);
    return out;
}

std::string connected_pi1(const ComplexPtr& x) {
    if (x->of_dim(0).empty()) return "empty";
    return format_invariants(abelian_invariants(edge_path_pi1(x, x->of_dim(0)[0]).group));
}

const SpiTransition& transition_at(const SpiDiagram& d, int face) {
    for (auto& t : d.transitions)
        if (t.face == face && d.values[t.from].word.size() == 2) return t;
    throw Error("no transition at face " + std::to_string(face));
}

}  // namespace

std::string evaluate_record_key(const ExampleRecord& r, const std::string& key) {
    const ComplexPtr& x = r.complex;
    const Poset& P = x->poset();
    if (key == "counts") return join_counts(x->counts());
    if (key == "euler") return std::to_string(x->euler_characteristic());
    if (key == "pi1") return connected_pi1(x);
    if (key == "sd counts") return join_counts(subdivide(x)->complex->counts());
    if (key == "fibrant") return check_fibrant(x).verdict == FibrancyReport::Verdict::fibrant ? "yes" : "no";
    if (key == "spi0") {
        auto d = spi0(x, 2);
        std::string out;
        for (auto& v : d.values) out += (out.empty() ? "" : " ") + format_word(P, v.word) + ":" + std::to_string(v.classes);
        return out;
    }
    std::istringstream in(key);
    std::string head, what, detail;
    in >> head >> what >> detail;
    if (head == "stratum") {
        const int q = P.index_of(what);
        auto sub = stratum(x, q).complex;
        if (detail == "pi1") return connected_pi1(sub);
        if (detail == "vertices") return std::to_string(sub->of_dim(0).size());
    }
    if (head == "spi1" && r.bundle) {
        auto d = assemble_spi(*r.bundle);
        if (detail.empty()) return format_invariants(d.values.at(d.find(parse_word(P, what))).invariants);
        const int face = what == "d0" ? 0 : what == "d1" ? 1 : -1;
        if (face >= 0 && detail == "cokernel") return format_invariants(transition_at(d, face).cokernel);
        if (face >= 0 && detail == "kernel") return format_invariants(transition_at(d, face).kernel);
    }
    throw Error("unknown record key '" + key + "'");
}

std::vector<RecordCheck> check_example(const ExampleRecord& r) {
    std::vector<RecordCheck> out;
    for (auto& [k, v] : r.expected) out.push_back({k, v, evaluate_record_key(r, k)});
    return out;
}

}  // namespace strata
