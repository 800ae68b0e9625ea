#include "strata/io.hpp"

#include <algorithm>
#include <sstream>

#include "strata/morphism.hpp"

namespace strata {

ParseError::ParseError(int l, int c, const std::string& what)
    : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what), line(l), column(c) {}

namespace {

struct Token {
    std::string text;
    int column;
};

struct Line {
    int number;
    bool indented;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, !raw.empty() && (raw[0] == ' ' || raw[0] == '\t'), {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& l, size_t t, const std::string& what) {
    const int col = t < l.tokens.size() ? l.tokens[t].column : (l.tokens.empty() ? 1 : l.tokens.back().column);
    throw ParseError(l.number, col, what);
}

void expect_count(const Line& l, size_t n, const std::string& form) {
    if (l.tokens.size() != n) fail(l, std::min(l.tokens.size(), n), "expected '" + form + "'");
}

struct GenLine {
    const Line* line;
    ColorWord word;
};

}  // namespace

ComplexDocument parse_document(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty document");
    const Line& head = lines[0];
    if (head.tokens.size() != 2 || head.tokens[0].text != "strata-complex") fail(head, 0, "expected 'strata-complex 1'");
    if (head.tokens[1].text != "1") fail(head, 1, "unsupported format version '" + head.tokens[1].text + "'");

    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> covers;
    std::vector<const Line*> cover_lines, gen_lines, map_lines;
    std::optional<Token> pointing;
    const Line* pointing_line = nullptr;
    std::optional<std::string> map_target;
    std::string block;
    bool seen_poset = false, seen_gens = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& kw = l.tokens[0].text;
        if (!l.indented) {
            if (kw == "poset" || kw == "generators") {
                expect_count(l, 1, kw);
                bool& seen = kw == "poset" ? seen_poset : seen_gens;
                if (seen) fail(l, 0, "duplicate block '" + kw + "'");
                if (kw == "generators" && !seen_poset) fail(l, 0, "the poset block must come first");
                seen = true;
                block = kw;
            } else if (kw == "pointing") {
                expect_count(l, 2, "pointing LABEL");
                if (pointing) fail(l, 0, "duplicate pointing");
                pointing = l.tokens[1];
                pointing_line = &l;
                block.clear();
            } else if (kw == "map") {
                expect_count(l, 2, "map REFERENCE");
                if (map_target) fail(l, 0, "duplicate map block");
                map_target = l.tokens[1].text;
                block = kw;
            } else {
                fail(l, 0, "unknown block '" + kw + "'");
            }
            continue;
        }
        if (block == "poset") {
            if (kw == "element") {
                expect_count(l, 2, "element NAME");
                const std::string& name = l.tokens[1].text;
                if (std::find(elements.begin(), elements.end(), name) != elements.end())
                    fail(l, 1, "duplicate element '" + name + "'");
                elements.push_back(name);
            } else if (kw == "cover") {
                expect_count(l, 4, "cover NAME < NAME");
                if (l.tokens[2].text != "<") fail(l, 2, "expected '<'");
                cover_lines.push_back(&l);
            } else {
                fail(l, 0, "expected 'element' or 'cover'");
            }
        } else if (block == "generators") {
            gen_lines.push_back(&l);
        } else if (block == "map") {
            map_lines.push_back(&l);
        } else {
            fail(l, 0, "indented line outside a block");
        }
    }
    if (!seen_poset) throw ParseError(head.number, 1, "missing poset block");
    if (elements.empty()) throw ParseError(head.number, 1, "the poset has no elements");
    auto element = [&](const Line& l, size_t t) {
        auto it = std::find(elements.begin(), elements.end(), l.tokens[t].text);
        if (it == elements.end()) fail(l, t, "unknown poset element '" + l.tokens[t].text + "'");
        return static_cast<int>(it - elements.begin());
    };
    for (const Line* l : cover_lines) {
        const int a = element(*l, 1), b = element(*l, 3);
        // reject b <= a under the covers so far
        std::vector<int> stack{b};
        std::vector<bool> seen(elements.size(), false);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            if (u == a) fail(*l, 1, "relations form a cycle");
            if (seen[u]) continue;
            seen[u] = true;
            for (auto [x, y] : covers)
                if (x == u) stack.push_back(y);
        }
        covers.push_back({a, b});
    }
    Poset P(elements, covers);

    std::vector<GenLine> gens;
    for (const Line* l : gen_lines) {
        if (l->tokens.size() < 2) fail(*l, 1, "expected 'NAME [WORD]'");
        ColorWord w;
        try {
            w = parse_word(P, l->tokens[1].text);
        } catch (const Error& e) {
            fail(*l, 1, e.what());
        }
        const size_t n = w.size() - 1;
        if (n == 0 && l->tokens.size() != 2) fail(*l, 2, "a vertex has no face list");
        if (n > 0) {
            if (l->tokens.size() < 3 || l->tokens[2].text != ":") fail(*l, 2, "expected ':' before the face list");
            if (l->tokens.size() != n + 4) fail(*l, std::min(l->tokens.size(), n + 4), "expected " + std::to_string(n + 1) + " faces");
        }
        gens.push_back({l, std::move(w)});
    }
    std::stable_sort(gens.begin(), gens.end(), [](const GenLine& a, const GenLine& b) { return a.word.size() < b.word.size(); });
    FilteredComplex c(P);
    for (auto& g : gens) {
        const Line& l = *g.line;
        std::vector<SimplexRef> faces;
        for (size_t t = 3; t < l.tokens.size(); ++t) {
            try {
                faces.push_back(c.parse_label(l.tokens[t].text));
            } catch (const Error& e) {
                fail(l, t, e.what());
            }
        }
        try {
            c.add(l.tokens[0].text, g.word, std::move(faces));
        } catch (const Error& e) {
            fail(l, 0, e.what());
        }
    }
    ComplexDocument doc;
    doc.complex = finalize(std::move(c));
    if (pointing) {
        try {
            doc.complex->parse_label(pointing->text);
        } catch (const Error& e) {
            fail(*pointing_line, 1, e.what());
        }
        doc.pointing = pointing->text;
    }
    if (map_target) {
        DocumentMap m;
        m.target = *map_target;
        std::vector<bool> seen(doc.complex->size(), false);
        for (const Line* l : map_lines) {
            expect_count(*l, 3, "NAME -> LABEL");
            if (l->tokens[1].text != "->") fail(*l, 1, "expected '->'");
            auto g = doc.complex->find(l->tokens[0].text);
            if (!g) fail(*l, 0, "unknown generator '" + l->tokens[0].text + "'");
            if (seen[*g]) fail(*l, 0, "generator '" + l->tokens[0].text + "' mapped twice");
            seen[*g] = true;
            m.images.push_back({l->tokens[0].text, l->tokens[2].text});
        }
        doc.map = std::move(m);
    }
    return doc;
}

ComplexPtr parse_complex(std::string_view text) { return parse_document(text).complex; }

std::string emit_document(const ComplexDocument& doc) {
    const ComplexPtr& x = doc.complex;
    const Poset& P = x->poset();
    std::ostringstream out;
    out << "strata-complex 1\nposet\n";
    for (auto& name : P.names()) out << "  element " << name << "\n";
    for (auto [a, b] : P.covers()) out << "  cover " << P.name(a) << " < " << P.name(b) << "\n";
    out << "generators\n";
    for (int d = 0; d <= x->dim(); ++d) {
        std::vector<int> gs = x->of_dim(d);
        std::sort(gs.begin(), gs.end(), [&](int a, int b) { return x->gen(a).name < x->gen(b).name; });
        for (int g : gs) {
            const Generator& G = x->gen(g);
            out << "  " << G.name << " " << format_word(P, G.color);
            if (d > 0) {
                out << " :";
                for (auto& f : G.faces) out << " " << x->label(f);
            }
            out << "\n";
        }
    }
    if (doc.pointing) out << "pointing " << *doc.pointing << "\n";
    if (doc.map) {
        out << "map " << doc.map->target << "\n";
        auto images = doc.map->images;
        std::sort(images.begin(), images.end(), [&](const auto& a, const auto& b) {
            const Generator& A = x->gen(x->index_of(a.first));
            const Generator& B = x->gen(x->index_of(b.first));
            return std::tie(A.dim, A.name) < std::tie(B.dim, B.name);
        });
        for (auto& [g, im] : images) out << "  " << g << " -> " << im << "\n";
    }
    return out.str();
}

std::string emit_complex(const ComplexPtr& x) { return emit_document(ComplexDocument{x, std::nullopt, std::nullopt}); }

FilteredMap resolve_document_map(const ComplexDocument& doc, const ComplexPtr& target) {
    if (!doc.map) throw Error("the document has no map block");
    std::vector<std::optional<SimplexRef>> images(doc.complex->size());
    for (auto& [g, label] : doc.map->images) images[doc.complex->index_of(g)] = target->parse_label(label);
    std::vector<SimplexRef> out;
    for (int g = 0; g < doc.complex->size(); ++g) {
        if (!images[g]) throw ValidationError("map block has no image for '" + doc.complex->gen(g).name + "'");
        out.push_back(*images[g]);
    }
    FilteredMap f(doc.complex, target, std::move(out));
    f.validate();
    return f;
}

}  // namespace strata
