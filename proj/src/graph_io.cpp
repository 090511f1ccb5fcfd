#include "cliquedist/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cliquedist {
namespace {

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

LoadedGraph parse_edge_list(std::istream& in) {
    std::map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<EdgePair> edges;
    auto intern = [&](const std::string& label) -> Vertex {
        auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw ParseError("expected exactly two tokens, got \"" + line + "\"", lineno);
        }
        if (a == b) throw ParseError("self-loop \"" + a + "\"", lineno);
        const Vertex va = intern(a); // sequence the interning: first appearance wins
        const Vertex vb = intern(b);
        edges.emplace_back(va, vb);
    }
    return {Graph::build(labels.size(), edges), std::move(labels)};
}

namespace {

// GML token stream: brackets, quoted strings, bare words/numbers.
struct GmlLexer {
    explicit GmlLexer(std::istream& in) : in_(in) {}

    // Returns false at end of input.
    bool next(std::string& tok) {
        tok.clear();
        char c;
        while (in_.get(c)) {
            if (c == '\n') ++line_;
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '#') { // comment to end of line
                std::string skip;
                std::getline(in_, skip);
                ++line_;
                continue;
            }
            if (c == '[' || c == ']') {
                tok = c;
                return true;
            }
            if (c == '"') {
                while (in_.get(c) && c != '"') {
                    if (c == '\n') ++line_;
                    tok += c;
                }
                if (c != '"') throw ParseError("unterminated string", line_);
                if (tok.empty()) tok = "\"\""; // keep empty strings as a token
                return true;
            }
            do {
                tok += c;
            } while (in_.get(c) && !std::isspace(static_cast<unsigned char>(c)) && c != '[' &&
                     c != ']');
            if (c == '[' || c == ']') in_.unget();
            else if (c == '\n') ++line_;
            return true;
        }
        return false;
    }

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

} // namespace

LoadedGraph parse_gml(std::istream& in) {
    GmlLexer lex(in);
    std::string tok;

    // Scan for the top-level "graph [".
    bool found = false;
    while (lex.next(tok)) {
        if (lower(tok) == "graph") {
            if (!lex.next(tok) || tok != "[") throw ParseError("expected [ after graph", lex.line());
            found = true;
            break;
        }
    }
    if (!found) throw ParseError("no graph [ ... ] block found");

    std::map<long long, Vertex> id_map;
    std::vector<std::string> labels;
    std::vector<std::pair<long long, long long>> raw_edges;
    std::vector<std::size_t> raw_edge_lines;

    auto skip_value = [&](const std::string& first) {
        // A value is either a list [...] (skipped at any nesting depth) or a scalar.
        if (first == "[") {
            int depth = 1;
            std::string t;
            while (depth > 0) {
                if (!lex.next(t)) throw ParseError("unbalanced brackets", lex.line());
                if (t == "[") ++depth;
                else if (t == "]") --depth;
            }
        }
    };

    auto parse_long = [&](const std::string& s, const char* what) -> long long {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("expected integer ") + what + ", got \"" + s + "\"",
                             lex.line());
        }
    };

    // Parses one node [...] or edge [...] record; other keys are skipped.
    int depth = 1;
    while (depth > 0) {
        if (!lex.next(tok)) throw ParseError("unbalanced brackets", lex.line());
        if (tok == "]") {
            --depth;
            continue;
        }
        if (tok == "[") throw ParseError("unexpected [", lex.line());
        std::string key = lower(tok);
        if (!lex.next(tok)) throw ParseError("missing value for key " + key, lex.line());
        if (key == "node" && tok == "[") {
            long long id = -1;
            bool has_id = false;
            std::string label;
            std::string t;
            while (true) {
                if (!lex.next(t)) throw ParseError("unbalanced brackets in node", lex.line());
                if (t == "]") break;
                std::string k = lower(t);
                if (!lex.next(t)) throw ParseError("missing value in node", lex.line());
                if (k == "id") {
                    id = parse_long(t, "node id");
                    has_id = true;
                } else if (k == "label") {
                    label = (t == "\"\"") ? "" : t;
                } else {
                    skip_value(t);
                }
            }
            if (!has_id) throw ParseError("node without id", lex.line());
            if (id_map.count(id)) throw ParseError("duplicate node id " + std::to_string(id), lex.line());
            id_map[id] = static_cast<Vertex>(labels.size());
            labels.push_back(label.empty() ? std::to_string(id) : label);
        } else if (key == "edge" && tok == "[") {
            long long src = -1, dst = -1;
            bool has_src = false, has_dst = false;
            std::string t;
            while (true) {
                if (!lex.next(t)) throw ParseError("unbalanced brackets in edge", lex.line());
                if (t == "]") break;
                std::string k = lower(t);
                if (!lex.next(t)) throw ParseError("missing value in edge", lex.line());
                if (k == "source") {
                    src = parse_long(t, "edge source");
                    has_src = true;
                } else if (k == "target") {
                    dst = parse_long(t, "edge target");
                    has_dst = true;
                } else {
                    skip_value(t);
                }
            }
            if (!has_src || !has_dst) throw ParseError("edge without source/target", lex.line());
            raw_edges.emplace_back(src, dst);
            raw_edge_lines.push_back(lex.line());
        } else {
            skip_value(tok); // e.g. directed 0, Creator "...", graphics [...]
        }
    }

    std::vector<EdgePair> edges;
    edges.reserve(raw_edges.size());
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        auto [s, t] = raw_edges[i];
        auto is = id_map.find(s);
        auto it = id_map.find(t);
        if (is == id_map.end() || it == id_map.end()) {
            throw ParseError("edge references undeclared node id " +
                                 std::to_string(is == id_map.end() ? s : t),
                             raw_edge_lines[i]);
        }
        if (is->second == it->second) {
            throw ParseError("self-loop on node id " + std::to_string(s), raw_edge_lines[i]);
        }
        edges.emplace_back(is->second, it->second);
    }
    return {Graph::build(labels.size(), edges), std::move(labels)};
}

LoadedGraph parse_pajek(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0;
    bool have_vertices = false;
    bool in_edges = false;
    std::vector<EdgePair> edges;
    std::vector<std::string> labels;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || line[0] == '%') continue;
        if (line[0] == '*') {
            std::istringstream ls(line);
            std::string marker;
            ls >> marker;
            marker = lower(marker);
            if (marker == "*vertices") {
                if (!(ls >> n)) throw ParseError("missing vertex count after *Vertices", lineno);
                have_vertices = true;
                labels.resize(n);
                in_edges = false;
            } else if (marker == "*edges" || marker == "*arcs") {
                if (!have_vertices) throw ParseError("*Edges before *Vertices", lineno);
                in_edges = true;
            } else {
                in_edges = false; // e.g. *Matrix or other sections: skipped
            }
            continue;
        }
        if (!have_vertices) throw ParseError("data before *Vertices header", lineno);
        if (!in_edges) {
            // Vertex definition line: "id \"name\" [coords...]". Keep the name.
            std::istringstream ls(line);
            std::size_t id;
            if (!(ls >> id) || id < 1 || id > n) continue;
            std::string rest;
            std::getline(ls, rest);
            auto q1 = rest.find('"');
            auto q2 = rest.rfind('"');
            if (q1 != std::string::npos && q2 > q1) labels[id - 1] = rest.substr(q1 + 1, q2 - q1 - 1);
            continue;
        }
        std::istringstream ls(line);
        std::size_t a, b;
        if (!(ls >> a >> b)) throw ParseError("malformed edge line \"" + line + "\"", lineno);
        if (a < 1 || a > n || b < 1 || b > n) {
            throw ParseError("vertex index outside 1.." + std::to_string(n), lineno);
        }
        if (a == b) throw ParseError("self-loop on vertex " + std::to_string(a), lineno);
        edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        // trailing weight (and anything after) discarded
    }
    if (!have_vertices) throw ParseError("missing *Vertices header");
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i].empty()) labels[i] = std::to_string(i + 1);
    }
    return {Graph::build(n, edges), std::move(labels)};
}

LoadedGraph parse_graph(std::istream& in, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(in);
        case GraphFormat::gml: return parse_gml(in);
        case GraphFormat::pajek: return parse_pajek(in);
    }
    throw std::logic_error("unknown format");
}

LoadedGraph load_graph_file(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_graph(in, format);
}

std::string write_edge_list(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

GraphFormat format_from_name(const std::string& name) {
    std::string f = lower(name);
    if (f == "edgelist" || f == "edge-list" || f == "el") return GraphFormat::edge_list;
    if (f == "gml") return GraphFormat::gml;
    if (f == "pajek" || f == "net") return GraphFormat::pajek;
    throw std::invalid_argument("unknown graph format \"" + name + "\"");
}

const std::vector<DatasetDescriptor>& bundled_datasets() {
    static const std::vector<DatasetDescriptor> sets = {
        {"Karate", "karate.gml", GraphFormat::gml, 34, 78},
        {"Dolphins", "dolphins.gml", GraphFormat::gml, 62, 159},
        {"PolBooks", "polbooks.gml", GraphFormat::gml, 105, 441},
        {"AdjNoun", "adjnoun.gml", GraphFormat::gml, 112, 425},
        {"Football", "football.gml", GraphFormat::gml, 115, 613},
        {"USAir97", "USAir97.net", GraphFormat::pajek, 332, 2126},
    };
    return sets;
}

LoadedGraph load_dataset(const std::filesystem::path& dir, const DatasetDescriptor& desc) {
    LoadedGraph lg = load_graph_file(dir / desc.filename, desc.format);
    if (lg.graph.vertex_count() != desc.expected_n || lg.graph.edge_count() != desc.expected_m) {
        throw ParseError(desc.name + ": expected " + std::to_string(desc.expected_n) + " vertices / " +
                         std::to_string(desc.expected_m) + " edges, parsed " +
                         std::to_string(lg.graph.vertex_count()) + " / " +
                         std::to_string(lg.graph.edge_count()));
    }
    return lg;
}

} // namespace cliquedist
