#include "copieslab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace copieslab {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

int parse_int(const std::string& tok, int line, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

Tuple parse_tuple(const std::string& tok, int line, int arity, int domain) {
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
        throw ParseError(line, "expected a parenthesized tuple, got '" + tok + "'");
    Tuple t;
    std::string body = tok.substr(1, tok.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        const std::size_t comma = body.find(',', start);
        const std::string entry = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
        t.push_back(parse_int(entry, line, "a tuple entry"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(t.size()) != arity)
        throw ParseError(line, "tuple '" + tok + "' has " + std::to_string(t.size()) +
                                   " entries, symbol arity is " + std::to_string(arity));
    for (int v : t)
        if (v < 0 || v >= domain)
            throw ParseError(line, "tuple entry " + std::to_string(v) + " outside domain 0.." +
                                       std::to_string(domain - 1));
    return t;
}

}  // namespace

std::vector<Structure> parse_structures(const std::string& text) {
    const std::vector<Line> lines = tokenize(text);
    std::vector<Structure> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        const Line& head = lines[i];
        if (head.tokens[0] != "language")
            throw ParseError(head.number, "expected 'language', got '" + head.tokens[0] + "'");
        if (head.tokens.size() < 2) throw ParseError(head.number, "language needs at least one arity");
        std::vector<int> arities;
        for (std::size_t t = 1; t < head.tokens.size(); ++t) {
            const int a = parse_int(head.tokens[t], head.number, "an arity");
            if (a < 1) throw ParseError(head.number, "arities must be positive");
            arities.push_back(a);
        }
        const RelationalLanguage language(arities);
        ++i;

        if (i >= lines.size() || lines[i].tokens[0] != "domain")
            throw ParseError(i < lines.size() ? lines[i].number : head.number, "expected 'domain <n>'");
        if (lines[i].tokens.size() != 2) throw ParseError(lines[i].number, "domain needs exactly one size");
        const int domain = parse_int(lines[i].tokens[1], lines[i].number, "the domain size");
        if (domain < 1) throw ParseError(lines[i].number, "domain must be non-empty");
        ++i;

        std::vector<TupleSet> relations;
        for (int symbol = 0; symbol < language.symbol_count(); ++symbol) {
            if (i >= lines.size())
                throw ParseError(lines.back().number, "missing 'rel " + std::to_string(symbol) + "' line");
            const Line& line = lines[i];
            if (line.tokens[0] != "rel")
                throw ParseError(line.number, "expected 'rel', got '" + line.tokens[0] + "'");
            if (line.tokens.size() < 3 || line.tokens[1] != std::to_string(symbol))
                throw ParseError(line.number, "expected 'rel " + std::to_string(symbol) + " { ... }'");
            if (line.tokens[2] != "{" || line.tokens.back() != "}")
                throw ParseError(line.number, "relation tuples must sit between '{' and '}'");
            TupleSet rel;
            for (std::size_t t = 3; t + 1 < line.tokens.size(); ++t)
                rel.push_back(parse_tuple(line.tokens[t], line.number, language.arity(symbol), domain));
            relations.push_back(std::move(rel));
            ++i;
        }
        try {
            out.emplace_back(language, domain, std::move(relations));
        } catch (const std::invalid_argument& e) {
            throw ParseError(head.number, e.what());
        }
    }
    return out;
}

Structure parse_structure(const std::string& text) {
    std::vector<Structure> all = parse_structures(text);
    if (all.size() != 1)
        throw ParseError(1, "expected exactly one structure, found " + std::to_string(all.size()));
    return std::move(all.front());
}

std::string emit_structure(const Structure& x) {
    std::ostringstream out;
    out << "language";
    for (int s = 0; s < x.language.symbol_count(); ++s) out << ' ' << x.language.arity(s);
    out << "\ndomain " << x.size << '\n';
    for (int s = 0; s < x.language.symbol_count(); ++s) {
        out << "rel " << s << " {";
        for (const Tuple& t : x.relations[static_cast<std::size_t>(s)]) {
            out << " (";
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (j) out << ',';
                out << t[j];
            }
            out << ')';
        }
        out << " }\n";
    }
    return out.str();
}

FinitePoset parse_poset(const std::string& text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "poset")
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'poset <n>'");
    if (lines[0].tokens.size() != 2) throw ParseError(lines[0].number, "poset needs exactly one size");
    const int n = parse_int(lines[0].tokens[1], lines[0].number, "the poset size");
    if (n < 1) throw ParseError(lines[0].number, "poset must be non-empty");

    std::vector<std::pair<int, int>> below;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "le")
            throw ParseError(line.number, "expected 'le <a> <b>', got '" + line.tokens[0] + "'");
        if (line.tokens.size() != 3) throw ParseError(line.number, "le needs exactly two elements");
        const int a = parse_int(line.tokens[1], line.number, "an element");
        const int b = parse_int(line.tokens[2], line.number, "an element");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError(line.number, "element outside 0.." + std::to_string(n - 1));
        if (a == b) throw ParseError(line.number, "covering pairs must be strict");
        below.emplace_back(a, b);
    }
    try {
        return FinitePoset::from_strict_pairs(n, below);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].number, e.what());
    }
}

std::string emit_poset(const FinitePoset& p) {
    std::ostringstream out;
    out << "poset " << p.size() << '\n';
    for (const auto& [a, b] : cover_pairs(p)) out << "le " << a << ' ' << b << '\n';
    return out.str();
}

std::string emit_hasse_dot(const FinitePoset& p, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) out << "  " << i << ";\n";
    for (const auto& [a, b] : cover_pairs(p)) out << "  " << a << " -> " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_diagram_dot(const std::vector<std::vector<int>>& equal_groups) {
    const int groups = static_cast<int>(equal_groups.size());
    std::vector<int> group_of(kSimilarityCount, -1);
    for (int g = 0; g < groups; ++g)
        for (int k : equal_groups[static_cast<std::size_t>(g)]) {
            if (k < 0 || k >= kSimilarityCount || group_of[static_cast<std::size_t>(k)] >= 0)
                throw std::invalid_argument("emit_diagram_dot: groups must partition the 12 relations");
            group_of[static_cast<std::size_t>(k)] = g;
        }
    for (int k = 0; k < kSimilarityCount; ++k)
        if (group_of[static_cast<std::size_t>(k)] < 0)
            throw std::invalid_argument("emit_diagram_dot: groups must partition the 12 relations");

    // Contracted implication edges, then reachability, then Hasse reduction.
    std::vector<std::uint8_t> edge(static_cast<std::size_t>(groups) * static_cast<std::size_t>(groups), 0);
    for (const HierarchyEdge& e : hierarchy_edges()) {
        const int u = group_of[static_cast<std::size_t>(e.lower)];
        const int v = group_of[static_cast<std::size_t>(e.upper)];
        if (u != v) edge[static_cast<std::size_t>(u) * groups + v] = 1;
    }
    std::vector<std::uint8_t> reach = edge;
    for (int w = 0; w < groups; ++w)
        for (int u = 0; u < groups; ++u)
            for (int v = 0; v < groups; ++v)
                if (reach[static_cast<std::size_t>(u) * groups + w] &&
                    reach[static_cast<std::size_t>(w) * groups + v])
                    reach[static_cast<std::size_t>(u) * groups + v] = 1;

    std::ostringstream out;
    out << "digraph similarity {\n  rankdir=BT;\n";
    for (int g = 0; g < groups; ++g) {
        out << "  g" << g << " [label=\"";
        for (std::size_t j = 0; j < equal_groups[static_cast<std::size_t>(g)].size(); ++j) {
            if (j) out << " = ";
            out << '~' << equal_groups[static_cast<std::size_t>(g)][j];
        }
        out << "\"];\n";
    }
    for (int u = 0; u < groups; ++u)
        for (int v = 0; v < groups; ++v) {
            if (!edge[static_cast<std::size_t>(u) * groups + v]) continue;
            bool shortcut = false;
            for (int w = 0; w < groups && !shortcut; ++w)
                if (w != u && w != v && reach[static_cast<std::size_t>(u) * groups + w] &&
                    reach[static_cast<std::size_t>(w) * groups + v])
                    shortcut = true;
            if (!shortcut) out << "  g" << u << " -> g" << v << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string emit_diagram_dot() {
    std::vector<std::vector<int>> singletons;
    for (int k = 0; k < kSimilarityCount; ++k) singletons.push_back({k});
    return emit_diagram_dot(singletons);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace copieslab
