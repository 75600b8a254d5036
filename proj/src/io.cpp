#include "reeb/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace reeb {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            } else if (text[pos] == '#' || text.compare(pos, 2, "//") == 0) {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (text.compare(pos, 2, "/*") == 0) {
                size_t end = text.find("*/", pos + 2);
                if (end == std::string::npos)
                    throw std::invalid_argument("unterminated comment in DOT input");
                pos = end + 2;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument(std::string("expected '") + c + "' in DOT input");
    }

    bool accept_arrow() {
        skip_ws();
        if (text.compare(pos, 2, "->") == 0) {
            pos += 2;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        if (pos < text.size() && text[pos] == '"') {
            size_t end = text.find('"', pos + 1);
            if (end == std::string::npos)
                throw std::invalid_argument("unterminated quoted id in DOT input");
            std::string s = text.substr(pos + 1, end - pos - 1);
            pos = end + 1;
            return s;
        }
        size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')
                ++pos;
            else
                break;
        }
        if (pos == start)
            throw std::invalid_argument("expected identifier in DOT input");
        return text.substr(start, pos - start);
    }

    void skip_attrs() {
        if (accept('[')) {
            int depth = 1;
            while (pos < text.size() && depth > 0) {
                if (text[pos] == '[') ++depth;
                if (text[pos] == ']') --depth;
                ++pos;
            }
            if (depth != 0)
                throw std::invalid_argument("unterminated attribute list in DOT input");
        }
    }
};

} // namespace

OrientedMultigraph parse_dot(const std::string& text) {
    Lexer lx{text};
    if (lx.ident() != "digraph")
        throw std::invalid_argument("expected 'digraph'");
    if (lx.peek() != '{') lx.ident(); // optional graph name
    lx.expect('{');

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    auto add_vertex = [&](const std::string& v) {
        for (const std::string& w : vertices)
            if (w == v) return;
        vertices.push_back(v);
    };

    int eid = 0;
    while (!lx.accept('}')) {
        if (lx.eof())
            throw std::invalid_argument("unterminated digraph body");
        std::string a = lx.ident();
        add_vertex(a);
        if (lx.accept_arrow()) {
            std::string b = lx.ident();
            add_vertex(b);
            edges.push_back({"e" + std::to_string(eid++), a, b});
        }
        lx.skip_attrs();
        lx.accept(';');
    }
    return OrientedMultigraph::make(std::move(vertices), std::move(edges));
}

std::string to_dot(const OrientedMultigraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    std::set<std::string> endpoint;
    for (const Edge& e : g.edges()) {
        endpoint.insert(e.src);
        endpoint.insert(e.dst);
    }
    for (const std::string& v : g.vertices())
        if (!endpoint.count(v)) out << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        out << "  " << e.src << " -> " << e.dst << ";\n";
    out << "}\n";
    return out.str();
}

OrientedMultigraph graph_from_json(const nlohmann::json& j) {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges"))
        edges.push_back({je.at("id").get<std::string>(), je.at("src").get<std::string>(),
                         je.at("dst").get<std::string>()});
    return OrientedMultigraph::make(std::move(vertices), std::move(edges));
}

nlohmann::json graph_to_json(const OrientedMultigraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
    return j;
}

OrientedMultigraph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return graph_from_json(nlohmann::json::parse(text));
        break;
    }
    return parse_dot(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace reeb
