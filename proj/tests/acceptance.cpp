// One PASS/FAIL line per acceptance criterion.  Exit status is the number of failures.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "strata/cli.hpp"

using namespace strata;

namespace {

// pinned limits, seconds
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 300.0;
constexpr double kLimit4 = 60.0;
constexpr double kLimit6 = 600.0;
constexpr double kLimit8Assembled = 60.0;
constexpr int kFillerSamples = 100;
constexpr std::uint64_t kFillerSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> coface_theta(int n, int k) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i) t.push_back(i < k ? i : i + 1);
    return t;
}

std::vector<int> codegeneracy_theta(int n, int k) {
    std::vector<int> t;
    for (int i = 0; i <= n + 1; ++i) t.push_back(i <= k ? i : i - 1);
    return t;
}

std::vector<std::pair<std::string, ComplexPtr>> fixture_corpus() {
    std::vector<std::pair<std::string, ComplexPtr>> out;
    std::vector<std::filesystem::path> paths;
    for (auto& e : std::filesystem::directory_iterator(cli::fixtures_dir()))
        if (e.path().extension() == ".complex" && e.path().stem() != "broken-identity") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (auto& p : paths) out.push_back({p.stem().string(), cli::load_reference(p.string()).doc.complex});
    return out;
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const bool a = is_admissible(ColorWord{0, 1, 2}, 2);
    const bool b = is_admissible(ColorWord{0, 1, 1}, 0);
    const bool c = is_admissible(ColorWord{0, 1, 1}, 2);
    if (a || b || !c) o.fail("classification differs");
    const double t = seconds_since(t0);
    if (t > kLimit1) o.fail("too slow");
    o.detail = "(not admissible, not admissible, admissible) = (" + std::string(a ? "admissible" : "not admissible") + ", " +
               (b ? "admissible" : "not admissible") + ", " + (c ? "admissible" : "not admissible") + ")";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    long adm = 0, non = 0;
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 2; len <= 4; ++len)
            for (auto& w : monotone_words(p, len))
                for (int k = 0; k < len; ++k) {
                    auto h = horn_inclusion(p, w, k);
                    bool validated = false;
                    try {
                        validate_witness(admissible_horn_witness(h));
                        validated = true;
                    } catch (const Error&) {
                    }
                    if (validated != is_admissible(h)) o.fail("witness/admissibility mismatch at " + format_word(p, w) + " k=" + std::to_string(k));
                    if (is_admissible(h)) {
                        ++adm;
                    } else {
                        ++non;
                        if (count_retractions(h) != 0) o.fail("retraction exists for " + format_word(p, w) + " k=" + std::to_string(k));
                    }
                }
    const double t = seconds_since(t0);
    if (t > kLimit2) o.fail("too slow");
    if (o.pass) o.detail = std::to_string(adm) + " admissible horns validated, " + std::to_string(non) + " non-admissible horns without retraction";
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto hc = cli::load_reference("fixtures:horn-p0p0p1-1").doc.complex;
    auto rep = check_fibrant(hc, 3);
    if (rep.verdict != FibrancyReport::Verdict::not_fibrant) o.fail("horn complex not reported non-fibrant");
    bool identity = false;
    for (auto& f : rep.failures)
        if (f.word == ColorWord{0, 0, 1} && f.k == 1 && f.lambda == identity_map(hc).images()) identity = true;
    if (!identity) o.fail("identity lifting problem missing from the witnesses");
    for (const char* name : {"fixtures:delta-p", "fixtures:nerve-p0p1"}) {
        auto r = check_fibrant(cli::load_reference(name).doc.complex, 3);
        if (r.verdict != FibrancyReport::Verdict::fibrant) o.fail(std::string(name) + " is not fibrant up to 3");
    }
    if (o.pass) o.detail = "horn: not fibrant with the identity witness; Δ^[p] and N(P) fibrant up to 3";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    long compared = 0;
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 4; ++len)
            for (auto& w : monotone_words(p, len)) {
                auto counts = subdivide(standard_simplex(p, w))->complex->counts();
                if (std::vector<long>(counts.begin(), counts.end()) != oracle::sd_counts(p, w)) o.fail("count mismatch at " + format_word(p, w));
                ++compared;
            }
    auto seg = subdivide(standard_simplex(Poset::chain(2), {0, 1}))->complex;
    if (seg->counts() != std::vector<int>{4, 3}) o.fail("sd([p0,p1]) is not 4/3");
    // a path: every vertex has degree <= 2 and the graph is connected
    {
        std::vector<int> degree(seg->size(), 0);
        for (int e : seg->of_dim(1)) {
            ++degree[seg->gen(e).faces[0].gen];
            ++degree[seg->gen(e).faces[1].gen];
        }
        int ends = 0;
        for (int v : seg->of_dim(0)) {
            if (degree[v] > 2 || degree[v] == 0) o.fail("sd([p0,p1]) is not a path");
            ends += degree[v] == 1;
        }
        if (ends != 2) o.fail("sd([p0,p1]) is not a path");
        if (edge_path_pi1(seg, seg->of_dim(0)[0]).group.generators != 0) o.fail("sd([p0,p1]) has a cycle");
    }
    const double t = seconds_since(t0);
    if (t > kLimit4) o.fail("too slow");
    if (o.pass) o.detail = std::to_string(compared) + " words match the chain enumerator; sd([p0,p1]) is the 4-vertex path";
    return o;
}

Outcome criterion5() {
    Outcome o;
    long squares = 0;
    auto check = [&](const FilteredMap& f) {
        auto sx = subdivide(f.domain());
        auto sy = subdivide(f.codomain());
        auto sf = sd_map(*sx, *sy, f);
        sf.validate();
        if (compose(f, last_vertex_map(*sx)).images() != compose(last_vertex_map(*sy), sf).images()) o.fail("square fails");
        ++squares;
    };
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 4; ++len)
            for (auto& w : monotone_words(p, len)) {
                auto to = standard_simplex_sub(p, w);
                const int n = len - 1;
                for (int k = 0; k <= n && n >= 1; ++k) check(simplex_operator(standard_simplex_sub(p, face(w, k)), to, coface_theta(n, k)));
                // degeneracies land in words of length <= 4
                if (len <= 3)
                    for (int k = 0; k <= n; ++k)
                        check(simplex_operator(standard_simplex_sub(p, degeneracy(w, k)), to, codegeneracy_theta(n, k)));
            }
    if (o.pass) o.detail = std::to_string(squares) + " naturality squares commute";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    long horns = 0;
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 3; ++len)
            for (auto& w : monotone_words(p, len))
                for (int k = 0; k < len; ++k) {
                    if (!is_admissible(w, k)) continue;
                    auto v = verify_presentation(generate_sdP_horn_presentation(horn_inclusion(p, w, k)));
                    if (!v.ok) o.fail("sd horn " + format_word(p, w) + " k=" + std::to_string(k) + ": " + v.condition);
                    ++horns;
                }
    std::string ex;
    for (const char* name : {"fixtures:delta-p", "fixtures:delta-p0p1", "fixtures:circle3"}) {
        auto ep = generate_ex_presentation(cli::load_reference(name).doc.complex, 2);
        auto v = verify_presentation(ep.presentation);
        if (!v.ok) o.fail(std::string(name) + ": " + v.condition + " " + v.witness);
        ex += std::string(ex.empty() ? "" : ", ") + name + " " + std::to_string(v.pairs) + " pairs";
    }
    const double t = seconds_since(t0);
    if (t > kLimit6) o.fail("too slow");
    if (o.pass) o.detail = std::to_string(horns) + " sd horn presentations verify; Ex at D=2: " + ex;
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::vector<ExFillerProblem> pool;
    long population = 0;
    for (auto& [name, x] : fixture_corpus()) {
        auto s = sample_ex_filler_problems(x, kFillerSamples, kFillerSeed, 3);
        if (s.status == SearchStatus::budget_exhausted) o.fail("budget exhausted sampling " + name);
        population += s.population;
        for (auto& p : s.problems) pool.push_back(std::move(p));
    }
    std::mt19937_64 rng(kFillerSeed);
    std::shuffle(pool.begin(), pool.end(), rng);
    if (static_cast<int>(pool.size()) < kFillerSamples) o.fail("fewer than 100 problems in the corpus");
    pool.resize(std::min<size_t>(pool.size(), kFillerSamples));
    long ok = 0;
    for (auto& p : pool) {
        try {
            validate_ex_filler(p.horn, p.lambda_flat, ex_filler(p.horn, p.lambda_flat));
            ++ok;
        } catch (const Error& e) {
            o.fail(std::string("filler failure: ") + e.what());
        }
    }
    if (o.pass) o.detail = std::to_string(ok) + "/" + std::to_string(pool.size()) + " fillers restrict exactly (population " + std::to_string(population) + ")";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto& cyl = example("cylinder");
    const auto& moe = example("moebius");
    auto a = assemble_spi(*cyl.bundle, 1), b = assemble_spi(*moe.bundle, 1);
    auto c = compare_diagrams(a, b);
    const double ta = seconds_since(t0);
    if (c.verdict != "distinguished") o.fail("verdict " + c.verdict);
    const bool witness = c.witness.rfind("cokernel [] vs [2]", 0) == 0 || c.witness.rfind("cokernel [2] vs []", 0) == 0;
    if (!witness) o.fail("witness " + c.witness);
    if (ta > kLimit8Assembled) o.fail("assembled route too slow");
    const auto t1 = std::chrono::steady_clock::now();
    for (auto* ex : {&cyl, &moe}) {
        auto tower = spi0(ex->complex, 2);
        auto assembled = assemble_spi(*ex->bundle, 0);
        if (tower.status != SearchStatus::complete) o.fail("tower budget exhausted");
        if (compare_diagrams(assembled, tower).verdict != "isomorphic-on-abelianized-invariants") o.fail(ex->name + ": tower sπ_0 disagrees");
        for (size_t i = 0; i < tower.values.size(); ++i)
            if (tower.values[i].classes != assembled.values[assembled.find(tower.values[i].word)].classes) o.fail(ex->name + ": class counts differ");
    }
    const double tt = seconds_since(t1);
    if (o.pass) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(2) << "distinguished, witness \"" << c.witness << "\"; assembled " << ta << " s; tower sπ_0 at stage 2 agrees (" << tt << " s)";
        o.detail = s.str();
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto a = spi0(example("pinched_torus").complex, 2);
    auto b = spi0(example("glued_spheres").complex, 2);
    if (!a.stable || !b.stable) o.fail("stabilization not reached at stage 2");
    const int top_a = a.find({0, 1}), top_b = b.find({0, 1});
    if (a.values[top_a].classes != 2) o.fail("pinched torus does not have two [p0,p1] components");
    for (auto& t : a.transitions)
        if (t.class_map != std::vector<int>{0, 0}) o.fail("pinched torus components do not meet in one class");
    if (b.values[top_b].classes != 4) o.fail("glued spheres do not have four [p0,p1] components");
    if (b.values[b.find({0})].classes != 2 || b.values[b.find({1})].classes != 2) o.fail("glued spheres strata counts");
    // paired: each [p0,p1] class meets exactly one class of each stratum, and the pair determines it
    {
        std::set<std::pair<int, int>> pairs;
        std::vector<int> d0, d1;
        for (auto& t : b.transitions) (t.face == 0 ? d0 : d1) = t.class_map;
        for (size_t c = 0; c < d0.size(); ++c) pairs.insert({d1[c], d0[c]});
        if (pairs.size() != 4) o.fail("glued spheres components are not paired");
    }
    auto c = compare_diagrams(a, b);
    if (c.verdict != "distinguished") o.fail("verdict " + c.verdict);
    if (o.pass) o.detail = "pinched torus [p0,p1]: 2 classes over one point; glued spheres: 4 paired classes; stable at stage 2; distinguished (" + c.witness + ")";
    return o;
}

Outcome criterion10() {
    Outcome o;
    auto a = assemble_spi(*example("solid_torus_pair_a").bundle, 1);
    auto b = assemble_spi(*example("solid_torus_pair_b").bundle, 1);
    for (auto* d : {&a, &b}) {
        if (d->values[d->find({0, 1})].invariants != std::vector<long>{0, 0}) o.fail("[p0,p1] group is not Z+Z");
        if (d->values[d->find({0})].invariants != std::vector<long>{0}) o.fail("singular group is not Z");
    }
    auto d1 = [](const SpiDiagram& d) {
        for (auto& t : d.transitions)
            if (t.face == 1) return t;
        throw Error("missing d1");
    };
    auto ta = d1(a), tb = d1(b);
    if (ta.kernel != std::vector<long>{0} || !ta.cokernel.empty()) o.fail("first map is not Id+0");
    if (tb.kernel != std::vector<long>{0} || tb.cokernel != std::vector<long>{2}) o.fail("second map is not 2+0");
    auto c = compare_diagrams(a, b);
    if (c.verdict != "distinguished" || c.witness.find("cokernel") == std::string::npos) o.fail("compare: " + c.verdict + " " + c.witness);
    if (o.pass) o.detail = "Z+Z with kernel Z and cokernels [] vs [2]; " + c.verdict + " (" + c.witness + ")";
    return o;
}

Outcome criterion11() {
    Outcome o;
    long map_pairs = 0, pointing_pairs = 0, words = 0;
    std::set<std::string> skip{"cylinder", "moebius", "solid_torus_pair_a", "solid_torus_pair_b", "torus7"};
    for (auto& [name, x] : fixture_corpus()) {
        const Poset& P = x->poset();
        const int stage = skip.count(name) ? 0 : 1;
        // homotopic maps from each representable give equal induced maps on sπ_0
        for (auto& w : nondegenerate_words(P)) {
            auto src = standard_simplex(P, w);
            auto [st, maps] = enumerate_maps(src, x);
            if (st != SearchStatus::complete) o.fail(name + ": budget");
            if (maps.size() > 40) maps.resize(40);
            for (size_t i = 0; i < maps.size(); ++i)
                for (size_t j = i + 1; j < maps.size(); ++j) {
                    if (!are_homotopic(maps[i], maps[j]).homotopic) continue;
                    ++map_pairs;
                    if (spi0_induced(maps[i], stage) != spi0_induced(maps[j], stage)) o.fail(name + ": homotopic maps induce different sπ_0 maps");
                }
            // homotopic pointings give equal sπ_1 invariants on their word
            if (!is_strict(P, w)) continue;
            std::vector<SimplexRef> simplices;
            for (int g : x->of_dim(static_cast<int>(w.size()) - 1))
                if (x->gen(g).color == w) simplices.push_back(x->ref(g));
            if (simplices.size() > 8) simplices.resize(8);
            for (size_t i = 0; i < simplices.size(); ++i)
                for (size_t j = i + 1; j < simplices.size(); ++j) {
                    auto pi = simplex_pointing(x, simplices[i]), pj = simplex_pointing(x, simplices[j]);
                    if (!are_homotopic(pi.phi, pj.phi).homotopic) continue;
                    ++pointing_pairs;
                    if (spi1_tower(x, pi, w, 0).invariants != spi1_tower(x, pj, w, 0).invariants) o.fail(name + ": homotopic pointings differ");
                }
        }
        // degenerate words reduce to their support
        for (int len = 2; len <= 3; ++len)
            for (auto& w : monotone_words(P, len)) {
                if (is_strict(P, w)) continue;
                auto full = spi0_level(x, w, stage), base = spi0_level(x, nondegenerate_support(w), stage);
                if (full.status != SearchStatus::complete || base.status != SearchStatus::complete) o.fail(name + ": budget");
                if (full.classes != base.classes) o.fail(name + ": degenerate word " + format_word(P, w) + " changes π_0");
                ++words;
            }
    }
    if (o.pass)
        o.detail = std::to_string(map_pairs) + " homotopic map pairs, " + std::to_string(pointing_pairs) + " homotopic pointing pairs, " +
                   std::to_string(words) + " degenerate words checked";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                                         criterion7, criterion8, criterion9, criterion10, criterion11};
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << " [" << std::fixed
                  << std::setprecision(2) << seconds_since(t0) << " s]" << std::endl;
        failures += !o.pass;
    }
    return failures;
}
