#include "strata/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#ifndef STRATA_FIXTURES_DIR
#define STRATA_FIXTURES_DIR "fixtures"
#endif

namespace strata::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0, kError = 1, kUnknown = 2;

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::complete: return "complete";
        case SearchStatus::stopped: return "complete";
        case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string join(const std::vector<int>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

json complex_json(const ComplexPtr& x) {
    const Poset& P = x->poset();
    json j;
    j["poset"]["elements"] = P.names();
    j["poset"]["covers"] = json::array();
    for (auto [a, b] : P.covers()) j["poset"]["covers"].push_back({P.name(a), P.name(b)});
    j["counts"] = x->counts();
    j["generators"] = json::array();
    for (int d = 0; d <= x->dim(); ++d) {
        std::vector<int> gs = x->of_dim(d);
        std::sort(gs.begin(), gs.end(), [&](int a, int b) { return x->gen(a).name < x->gen(b).name; });
        for (int g : gs) {
            const Generator& G = x->gen(g);
            json e;
            e["name"] = G.name;
            e["dim"] = G.dim;
            e["color"] = json::array();
            for (int c : G.color) e["color"].push_back(P.name(c));
            e["faces"] = json::array();
            for (auto& f : G.faces) e["faces"].push_back(x->label(f));
            j["generators"].push_back(std::move(e));
        }
    }
    return j;
}

std::string dot_id(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string complex_dot(const ComplexPtr& x) {
    const Poset& P = x->poset();
    std::ostringstream o;
    o << "digraph complex {\n";
    std::vector<int> vs = x->of_dim(0);
    std::sort(vs.begin(), vs.end(), [&](int a, int b) { return x->gen(a).name < x->gen(b).name; });
    for (int v : vs) o << "  " << dot_id(x->gen(v).name) << " [label=" << dot_id(x->gen(v).name + " " + format_word(P, x->gen(v).color)) << "];\n";
    if (x->dim() >= 1) {
        std::vector<int> es = x->of_dim(1);
        std::sort(es.begin(), es.end(), [&](int a, int b) { return x->gen(a).name < x->gen(b).name; });
        for (int e : es) {
            const auto& G = x->gen(e);
            o << "  " << dot_id(x->gen(G.faces[1].gen).name) << " -> " << dot_id(x->gen(G.faces[0].gen).name)
              << " [label=" << dot_id(G.name) << "];\n";
        }
    }
    o << "}\n";
    return o.str();
}

json diagram_json(const SpiDiagram& d) {
    const Poset& P = d.poset;
    json j;
    j["n"] = d.n;
    j["route"] = d.route;
    j["stage"] = d.stage;
    j["status"] = status_name(d.status);
    j["stable"] = d.stable;
    j["stability_note"] = "stability compares stages k-1 and k; it is evidence, not proof";
    j["values"] = json::array();
    for (auto& v : d.values) {
        json e;
        e["word"] = format_word(P, v.word);
        if (d.n == 0)
            e["classes"] = v.classes;
        else
            e["invariants"] = format_invariants(v.invariants);
        e["stable"] = v.stable;
        j["values"].push_back(std::move(e));
    }
    j["transitions"] = json::array();
    for (auto& t : d.transitions) {
        json e;
        e["from"] = format_word(P, d.values[t.from].word);
        e["to"] = format_word(P, d.values[t.to].word);
        e["face"] = t.face;
        if (d.n == 0) {
            e["class_map"] = t.class_map;
        } else {
            e["kernel"] = format_invariants(t.kernel);
            e["cokernel"] = format_invariants(t.cokernel);
        }
        j["transitions"].push_back(std::move(e));
    }
    return j;
}

std::string diagram_text(const SpiDiagram& d) {
    const Poset& P = d.poset;
    std::ostringstream o;
    o << "sπ_" << d.n << " diagram, route " << d.route;
    if (d.stage >= 0) o << ", stage " << d.stage;
    o << "\n";
    for (auto& v : d.values) {
        o << format_word(P, v.word) << ": ";
        if (d.n == 0)
            o << v.classes << (v.classes == 1 ? " class" : " classes");
        else
            o << format_invariants(v.invariants);
        if (d.stage >= 0) o << (v.stable ? ", stable" : ", not stable");
        o << "\n";
    }
    for (auto& t : d.transitions) {
        o << "d" << t.face << ": " << format_word(P, d.values[t.from].word) << " -> " << format_word(P, d.values[t.to].word) << ": ";
        if (d.n == 0) {
            for (size_t c = 0; c < t.class_map.size(); ++c) o << (c ? " " : "") << c << "->" << t.class_map[c];
        } else {
            o << "kernel " << format_invariants(t.kernel) << ", cokernel " << format_invariants(t.cokernel);
        }
        o << "\n";
    }
    if (d.stage >= 0) o << "stable: " << (d.stable ? "yes" : "no") << " (stages k-1 and k compared; evidence, not proof)\n";
    o << "status: " << status_name(d.status) << "\n";
    return o.str();
}

std::string diagram_dot(const SpiDiagram& d) {
    const Poset& P = d.poset;
    std::ostringstream o;
    o << "digraph spi" << d.n << " {\n";
    auto node = [&](int v, int c) { return dot_id(format_word(P, d.values[v].word) + (d.n == 0 ? "#" + std::to_string(c) : "")); };
    for (size_t v = 0; v < d.values.size(); ++v) {
        if (d.n == 0) {
            for (int c = 0; c < d.values[v].classes; ++c) o << "  " << node(v, c) << ";\n";
        } else {
            o << "  " << node(v, 0) << " [label=" << dot_id(format_word(P, d.values[v].word) + " " + format_invariants(d.values[v].invariants)) << "];\n";
        }
    }
    for (auto& t : d.transitions) {
        if (d.n == 0) {
            for (size_t c = 0; c < t.class_map.size(); ++c)
                o << "  " << node(t.from, c) << " -> " << node(t.to, t.class_map[c]) << " [label=\"d" << t.face << "\"];\n";
        } else {
            o << "  " << node(t.from, 0) << " -> " << node(t.to, 0) << " [label=" << dot_id("d" + std::to_string(t.face) + " coker " + format_invariants(t.cokernel)) << "];\n";
        }
    }
    o << "}\n";
    return o.str();
}

SimplexRef default_pointing(const ComplexPtr& x) {
    const Poset& P = x->poset();
    int best = -1;
    for (int g = 0; g < x->size(); ++g) {
        const auto& c = x->gen(g).color;
        if (!is_strict(P, c)) continue;
        if (best < 0 || c.size() > x->gen(best).color.size()) best = g;
    }
    if (best < 0) throw Error("no simplex with a strictly increasing color word to point at");
    return x->ref(best);
}

struct Options {
    std::string format = "text";
    long budget = default_budget();
    int dim_bound = -1;
    int stage = -1;
    std::uint64_t seed = 1;
    std::string mode = "filtered";
    int iterations = 1;
    std::string word;
    int k = -1;
    std::string pointing;
    std::string route;
    int n = -1;
    int fillers = 0;
    bool list = false;
    std::string emit;
    std::vector<std::string> refs;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int dispatch(const std::string& verb, const Options& o) {
        if (o.format != "text" && o.format != "json" && o.format != "dot") throw CLI::ValidationError("--format", "must be text, json or dot");
        if (verb == "check-fibrant") return check_fibrant_verb(o);
        if (verb == "subdivide") return subdivide_verb(o);
        if (verb == "ex") return ex_verb(o);
        if (verb == "gen-fsae") return fsae_verb(o, false);
        if (verb == "verify-fsae") return fsae_verb(o, true);
        if (verb == "spi0") return spi0_verb(o);
        if (verb == "spi1") return spi1_verb(o);
        if (verb == "compare") return compare_verb(o);
        if (verb == "examples") return examples_verb(o);
        throw Error("unknown verb '" + verb + "'");
    }

private:
    std::ostream& out_;
    std::ostream& err_;

    void no_dot(const Options& o, const std::string& verb) {
        if (o.format == "dot") throw CLI::ValidationError("--format", "dot is not available for " + verb);
    }
    void emit_json(json j) { out_ << j.dump(2) << "\n"; }
    const Loaded& one(const Options& o, std::vector<Loaded>& store) {
        if (o.refs.size() != 1) throw CLI::ValidationError("INPUT", "expected exactly one input");
        store.push_back(load_reference(o.refs[0]));
        return store.back();
    }

    int check_fibrant_verb(const Options& o) {
        no_dot(o, "check-fibrant");
        std::vector<Loaded> s;
        const Loaded& in = one(o, s);
        const int D = o.dim_bound < 0 ? 3 : o.dim_bound;
        auto rep = check_fibrant(in.doc.complex, D, o.budget);
        const ComplexPtr& x = in.doc.complex;
        auto describe = [&](const HornProblem& f) {
            auto h = horn_inclusion(x->poset(), f.word, f.k);
            json e;
            e["word"] = format_word(x->poset(), f.word);
            e["k"] = f.k;
            e["lambda"] = json::object();
            for (int g = 0; g < h.horn.complex->size(); ++g) e["lambda"][h.horn.complex->gen(g).name] = x->label(f.lambda[g]);
            return e;
        };
        if (o.format == "json") {
            json j{{"verb", "check-fibrant"}, {"input", in.reference}, {"verdict", verdict_name(rep.verdict)},
                   {"dim_bound", D}, {"horns_checked", rep.horns_checked}, {"problems_checked", rep.problems_checked}};
            j["witnesses"] = json::array();
            for (auto& f : rep.failures) j["witnesses"].push_back(describe(f));
            emit_json(j);
        } else {
            out_ << "verdict: " << verdict_name(rep.verdict) << "\n";
            out_ << "dimension bound: " << D << "\n";
            out_ << "horns checked: " << rep.horns_checked << "\nproblems checked: " << rep.problems_checked << "\n";
            const size_t shown = std::min<size_t>(rep.failures.size(), 5);
            for (size_t i = 0; i < shown; ++i) {
                auto e = describe(rep.failures[i]);
                out_ << "witness: horn " << e["word"].get<std::string>() << " at " << rep.failures[i].k << ", no filler for";
                for (auto& [g, im] : e["lambda"].items()) out_ << " " << g << "->" << im.get<std::string>();
                out_ << "\n";
            }
            if (rep.failures.size() > shown) out_ << "(" << rep.failures.size() - shown << " more witnesses)\n";
        }
        return rep.verdict == FibrancyReport::Verdict::unknown ? kUnknown : kOk;
    }

    int subdivide_verb(const Options& o) {
        std::vector<Loaded> s;
        const Loaded& in = one(o, s);
        if (o.iterations < 0) throw CLI::ValidationError("--iterations", "must be non-negative");
        ComplexPtr x = in.doc.complex;
        const SdMode mode = parse_mode(o.mode);
        for (int i = 0; i < o.iterations; ++i) x = subdivide(x, mode)->complex;
        if (o.format == "json") {
            emit_json({{"verb", "subdivide"}, {"input", in.reference}, {"mode", mode_name(mode)}, {"iterations", o.iterations},
                       {"complex", complex_json(x)}});
        } else if (o.format == "dot") {
            out_ << complex_dot(x);
        } else {
            out_ << "counts: " << join(x->counts(), "/") << "\n" << emit_complex(x);
        }
        return kOk;
    }

    int ex_verb(const Options& o) {
        no_dot(o, "ex");
        std::vector<Loaded> s;
        const Loaded& in = one(o, s);
        const ComplexPtr& x = in.doc.complex;
        const Poset& P = x->poset();
        const int stage = o.stage < 0 ? 1 : o.stage;
        const int D = o.dim_bound < 0 ? 1 : o.dim_bound;
        std::vector<ColorWord> words;
        if (!o.word.empty())
            words.push_back(parse_word(P, o.word));
        else
            for (int len = 1; len <= D + 1; ++len)
                for (auto& w : monotone_words(P, len)) words.push_back(w);
        json levels = json::array();
        bool unknown = false;
        for (auto& w : words) {
            auto lv = ex_level(x, w, stage, o.budget);
            long nondeg = 0;
            for (auto& e : lv.elements)
                if (ex_degeneracy_mask(e, w, stage) == 0) ++nondeg;
            unknown = unknown || lv.status == SearchStatus::budget_exhausted;
            levels.push_back({{"word", format_word(P, w)}, {"elements", lv.elements.size()}, {"nondegenerate", nondeg},
                              {"status", status_name(lv.status)}});
        }
        json j{{"verb", "ex"}, {"input", in.reference}, {"stage", stage}, {"levels", levels}};
        if (o.fillers > 0) {
            auto sample = sample_ex_filler_problems(x, o.fillers, o.seed, std::max(2, D + 1), o.budget);
            long ok = 0;
            std::vector<std::string> failures;
            for (auto& p : sample.problems) {
                try {
                    validate_ex_filler(p.horn, p.lambda_flat, ex_filler(p.horn, p.lambda_flat));
                    ++ok;
                } catch (const Error& e) {
                    failures.push_back(format_word(P, p.horn.word) + " at " + std::to_string(p.horn.k) + ": " + e.what());
                }
            }
            unknown = unknown || sample.status == SearchStatus::budget_exhausted;
            j["fillers"] = {{"seed", o.seed}, {"population", sample.population}, {"sampled", sample.problems.size()},
                            {"valid", ok}, {"failures", failures}};
        }
        if (o.format == "json") {
            emit_json(j);
        } else {
            out_ << "Ex stage " << stage << " of " << in.reference << "\n";
            for (auto& l : levels)
                out_ << l["word"].get<std::string>() << ": " << l["elements"] << " elements, " << l["nondegenerate"]
                     << " non-degenerate (" << l["status"].get<std::string>() << ")\n";
            if (j.contains("fillers")) {
                auto& f = j["fillers"];
                out_ << "fillers: " << f["valid"] << " of " << f["sampled"] << " valid (population " << f["population"]
                     << ", seed " << o.seed << ")\n";
                for (auto& m : f["failures"]) out_ << "filler failure: " << m.get<std::string>() << "\n";
            }
        }
        if (j.contains("fillers") && !j["fillers"]["failures"].empty()) return kError;
        return unknown ? kUnknown : kOk;
    }

    int fsae_verb(const Options& o, bool verify) {
        no_dot(o, verify ? "verify-fsae" : "gen-fsae");
        AnodynePresentation p;
        std::string source;
        std::vector<int> undefined;
        if (!o.word.empty()) {
            if (!o.refs.empty()) throw CLI::ValidationError("INPUT", "give either --word/--k or an input, not both");
            std::string body = o.word;
            int top = 0;
            for (size_t i = 0; i < body.size(); ++i)
                if (body[i] == 'p') top = std::max(top, std::atoi(body.c_str() + i + 1));
            Poset P = Poset::chain(top + 1);
            ColorWord w = parse_word(P, o.word);
            if (o.k < 0 || o.k >= static_cast<int>(w.size())) throw CLI::ValidationError("--k", "horn index out of range");
            if (!is_admissible(w, o.k)) throw Error("the horn " + o.word + " at " + std::to_string(o.k) + " is not admissible");
            p = generate_sdP_horn_presentation(horn_inclusion(P, w, o.k));
            source = "sd horn " + o.word + " at " + std::to_string(o.k);
        } else {
            std::vector<Loaded> s;
            const Loaded& in = one(o, s);
            auto ep = generate_ex_presentation(in.doc.complex, o.dim_bound < 0 ? 2 : o.dim_bound, o.budget);
            if (ep.ex.status == SearchStatus::budget_exhausted) {
                err_ << "budget exhausted while truncating Ex\n";
                return kUnknown;
            }
            p = ep.presentation;
            undefined = ep.undefined_phi;
            source = "Ex truncation of " + in.reference;
        }
        const ComplexPtr& y = p.inclusion.codomain();
        auto name = [&](int g) { return y->gen(g).name; };
        json j{{"verb", verify ? "verify-fsae" : "gen-fsae"}, {"source", source}, {"dim_bound", p.dim_bound}};
        json pairs = json::array();
        for (size_t i = 0; i < p.type2.size(); ++i)
            pairs.push_back({{"type2", name(p.type2[i])}, {"type1", p.phi[i] >= 0 ? json(name(p.phi[i])) : json(nullptr)}});
        json frontier = json::array();
        for (int g : p.frontier) frontier.push_back(name(g));
        j["pairs"] = pairs;
        j["frontier"] = frontier;
        json undef = json::array();
        for (int g : undefined) undef.push_back(name(g));
        j["undefined"] = undef;
        int code = kOk;
        if (verify) {
            auto v = verify_presentation(p);
            j["ok"] = v.ok;
            j["condition"] = v.condition;
            j["witness"] = v.witness;
            j["outside"] = v.outside;
            j["max_same_dim_ancestors"] = v.max_same_dim_ancestors;
            if (!v.ok) code = kError;
        }
        if (o.format == "json") {
            emit_json(j);
        } else {
            out_ << "presentation: " << source << "\n";
            if (!verify) {
                for (auto& e : pairs)
                    out_ << "pair " << e["type2"].get<std::string>() << " -> "
                         << (e["type1"].is_null() ? std::string("(undefined)") : e["type1"].get<std::string>()) << "\n";
                for (auto& f : frontier) out_ << "frontier " << f.get<std::string>() << "\n";
            } else {
                out_ << "pairs: " << pairs.size() << "\nfrontier: " << frontier.size() << "\n";
                out_ << "verdict: " << (j["ok"].get<bool>() ? "ok" : "fail") << "\n";
                if (!j["ok"].get<bool>())
                    out_ << "condition: " << j["condition"].get<std::string>() << "\nwitness: " << j["witness"].get<std::string>() << "\n";
            }
        }
        return code;
    }

    int spi0_verb(const Options& o) {
        std::vector<Loaded> s;
        const Loaded& in = one(o, s);
        auto d = spi0(in.doc.complex, o.stage < 0 ? 2 : o.stage, o.budget);
        print_diagram(o, "spi0", in.reference, d);
        return d.status == SearchStatus::budget_exhausted ? kUnknown : kOk;
    }

    SpiDiagram spi1_of(const Loaded& in, const Options& o) {
        std::string route = o.route;
        if (route.empty()) route = in.example && in.example->bundle ? "assembled" : "tower";
        if (route == "assembled") {
            if (!in.example || !in.example->bundle) throw Error("the assembled route needs a bundle example");
            return assemble_spi(*in.example->bundle, 1);
        }
        if (route != "tower") throw CLI::ValidationError("--route", "must be tower or assembled");
        const ComplexPtr& x = in.doc.complex;
        SimplexRef base = !o.pointing.empty()     ? x->parse_label(o.pointing)
                          : in.doc.pointing ? x->parse_label(*in.doc.pointing)
                                            : default_pointing(x);
        return spi1(x, simplex_pointing(x, base), o.stage < 0 ? 1 : o.stage, o.budget);
    }

    int spi1_verb(const Options& o) {
        std::vector<Loaded> s;
        const Loaded& in = one(o, s);
        auto d = spi1_of(in, o);
        print_diagram(o, "spi1", in.reference, d);
        return d.status == SearchStatus::budget_exhausted ? kUnknown : kOk;
    }

    void print_diagram(const Options& o, const std::string& verb, const std::string& ref, const SpiDiagram& d) {
        if (o.format == "json") {
            json j{{"verb", verb}, {"input", ref}, {"diagram", diagram_json(d)}};
            emit_json(j);
        } else if (o.format == "dot") {
            out_ << diagram_dot(d);
        } else {
            out_ << diagram_text(d);
        }
    }

    int compare_verb(const Options& o) {
        no_dot(o, "compare");
        if (o.refs.size() != 2) throw CLI::ValidationError("INPUT", "compare needs two inputs");
        Loaded a = load_reference(o.refs[0]), b = load_reference(o.refs[1]);
        const bool bundles = a.example && a.example->bundle && b.example && b.example->bundle;
        const int n = o.n >= 0 ? o.n : (bundles ? 1 : 0);
        SpiDiagram da, db;
        if (n == 1) {
            da = spi1_of(a, o);
            db = spi1_of(b, o);
        } else if (n == 0) {
            if (o.route == "assembled") {
                if (!bundles) throw Error("the assembled route needs bundle examples");
                da = assemble_spi(*a.example->bundle, 0);
                db = assemble_spi(*b.example->bundle, 0);
            } else {
                da = spi0(a.doc.complex, o.stage < 0 ? 2 : o.stage, o.budget);
                db = spi0(b.doc.complex, o.stage < 0 ? 2 : o.stage, o.budget);
            }
        } else {
            throw CLI::ValidationError("--n", "must be 0 or 1");
        }
        auto c = compare_diagrams(da, db);
        const bool budget = da.status == SearchStatus::budget_exhausted || db.status == SearchStatus::budget_exhausted;
        if (o.format == "json") {
            emit_json({{"verb", "compare"}, {"inputs", o.refs}, {"n", n}, {"verdict", c.verdict}, {"witness", c.witness},
                       {"left", diagram_json(da)}, {"right", diagram_json(db)}});
        } else {
            out_ << "verdict: " << c.verdict << "\n";
            if (!c.witness.empty()) out_ << "witness: " << c.witness << "\n";
            out_ << "invariant: sπ_" << n << " (" << da.route << " route)\n";
        }
        if (budget || c.verdict == "inconclusive") return kUnknown;
        return kOk;
    }

    int examples_verb(const Options& o) {
        no_dot(o, "examples");
        if (o.list == !o.emit.empty()) throw CLI::ValidationError("examples", "give exactly one of --list or --emit NAME");
        if (o.list) {
            if (o.format == "json") {
                json arr = json::array();
                for (auto& name : example_names()) {
                    const auto& r = example(name);
                    json e{{"name", r.name}, {"description", r.description}, {"bundle", r.bundle.has_value()}};
                    e["expected"] = json::object();
                    for (auto& [k, v] : r.expected) e["expected"][k] = v;
                    arr.push_back(e);
                }
                emit_json({{"verb", "examples"}, {"examples", arr}});
            } else {
                for (auto& name : example_names()) out_ << name << "  " << example(name).description << "\n";
            }
            return kOk;
        }
        const auto& r = example(o.emit);
        if (o.format == "json") {
            emit_json({{"verb", "examples"}, {"name", r.name}, {"complex", complex_json(r.complex)}});
        } else {
            out_ << "# " << r.name << ": " << r.description << "\n";
            for (auto& [k, v] : r.expected) out_ << "# expected " << k << " = " << v << "\n";
            out_ << emit_complex(r.complex);
        }
        return kOk;
    }
};

}  // namespace

std::string fixtures_dir() {
    if (const char* v = std::getenv("STRATA_FIXTURES"); v && *v) return v;
    return STRATA_FIXTURES_DIR;
}

Loaded load_reference(const std::string& ref) {
    Loaded out;
    out.reference = ref;
    if (ref.rfind("examples:", 0) == 0) {
        out.example = &example(ref.substr(9));
        out.doc.complex = out.example->complex;
        return out;
    }
    std::string path = ref;
    if (ref.rfind("fixtures:", 0) == 0) path = fixtures_dir() + "/" + ref.substr(9) + ".complex";
    try {
        out.doc = parse_document(read_file(path));
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"filtered simplicial sets: fibrancy, subdivision, Ex, anodyne presentations and sπ invariants", "strata"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool inputs) {
        sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--budget", o.budget, "search node budget (default $STRATA_BUDGET or 50000000)")->check(CLI::PositiveNumber);
        if (inputs) sub->add_option("INPUT", o.refs, "examples:NAME, fixtures:NAME or a file");
    };
    auto* cf = app.add_subcommand("check-fibrant", "check horn filling up to a dimension bound");
    common(cf, true);
    cf->add_option("--dim-bound", o.dim_bound, "largest horn dimension (default 3)");
    auto* sd = app.add_subcommand("subdivide", "subdivide a complex");
    common(sd, true);
    sd->add_option("--mode", o.mode, "filtered, naive or classical")->check(CLI::IsMember({"filtered", "naive", "classical"}));
    sd->add_option("--iterations", o.iterations, "number of subdivisions (default 1)");
    auto* ex = app.add_subcommand("ex", "levels of the Ex tower");
    common(ex, true);
    ex->add_option("--stage", o.stage, "tower stage (default 1)");
    ex->add_option("--dim-bound", o.dim_bound, "largest dimension listed (default 1)");
    ex->add_option("--word", o.word, "a single color word, e.g. [p0,p1]");
    ex->add_option("--fillers", o.fillers, "validate this many sampled horn fillers");
    ex->add_option("--seed", o.seed, "sampling seed (default 1)");
    for (auto* sub : {app.add_subcommand("gen-fsae", "generate an anodyne presentation"),
                      app.add_subcommand("verify-fsae", "generate and verify an anodyne presentation")}) {
        common(sub, true);
        sub->add_option("--word", o.word, "horn word for the subdivided horn presentation");
        sub->add_option("--k", o.k, "horn index");
        sub->add_option("--dim-bound", o.dim_bound, "dimension bound of the Ex truncation (default 2)");
    }
    auto* s0 = app.add_subcommand("spi0", "filtered connected components");
    common(s0, true);
    s0->add_option("--stage", o.stage, "tower stage (default 2)");
    auto* s1 = app.add_subcommand("spi1", "filtered fundamental group diagram");
    common(s1, true);
    s1->add_option("--stage", o.stage, "tower stage (default 1)");
    s1->add_option("--pointing", o.pointing, "simplex label s-word@name");
    s1->add_option("--route", o.route, "tower or assembled")->check(CLI::IsMember({"tower", "assembled"}));
    auto* cmp = app.add_subcommand("compare", "compare two complexes by sπ invariants");
    common(cmp, true);
    cmp->add_option("--n", o.n, "0 or 1 (default 1 for bundle examples, else 0)");
    cmp->add_option("--stage", o.stage, "tower stage");
    cmp->add_option("--route", o.route, "tower or assembled")->check(CLI::IsMember({"tower", "assembled"}));
    auto* exs = app.add_subcommand("examples", "the built-in example library");
    common(exs, false);
    exs->add_flag("--list", o.list, "list examples");
    exs->add_option("--emit", o.emit, "print an example in the complex format");
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kError;
    }
    try {
        Runner r(out, err);
        return r.dispatch(app.get_subcommands().front()->get_name(), o);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
}

}  // namespace strata::cli
