#include "rt/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rt {

namespace {

using nlohmann::json;

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + t + "'", line);
    }
}

long parse_long(const std::string& t, int line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + t + "'", line);
    }
}

bool skippable(const std::string& line) {
    auto toks = tokens_of(line);
    return toks.empty() || toks[0][0] == '#';
}

}  // namespace

EdgeColouredGraph parse_ecg(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    EdgeColouredGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "ecg") throw ParseError("expected 'ecg <n>' header", lineno);
            n = parse_int(toks[1], lineno);
            if (n < 0) throw ParseError("negative vertex count", lineno);
            g = EdgeColouredGraph(n);
            continue;
        }
        if (toks[0] != "e" || toks.size() != 4) throw ParseError("expected 'e <u> <v> <colour>'", lineno);
        int u = parse_int(toks[1], lineno);
        int v = parse_int(toks[2], lineno);
        long c = parse_long(toks[3], lineno);
        try {
            g.add_edge(u, v, c);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (n < 0) throw ParseError("missing 'ecg <n>' header");
    return g;
}

EdgeColouredGraph parse_ecg_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_ecg(ss);
}

std::string write_ecg(const EdgeColouredGraph& g) {
    std::ostringstream out;
    out << "ecg " << g.n() << "\n";
    for (auto [u, v, c] : g.edges()) out << "e " << u << " " << v << " " << c << "\n";
    return out.str();
}

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    Digraph d;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "dg") throw ParseError("expected 'dg <n>' header", lineno);
            n = parse_int(toks[1], lineno);
            if (n < 0) throw ParseError("negative vertex count", lineno);
            d = Digraph(n);
            continue;
        }
        if (toks[0] != "a" || toks.size() != 3) throw ParseError("expected 'a <u> <v>'", lineno);
        int u = parse_int(toks[1], lineno);
        int v = parse_int(toks[2], lineno);
        try {
            d.add_arc(u, v);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (n < 0) throw ParseError("missing 'dg <n>' header");
    return d;
}

Digraph parse_digraph_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_digraph(ss);
}

std::string write_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "dg " << d.n() << "\n";
    for (auto [u, v] : d.arcs()) out << "a " << u << " " << v << "\n";
    return out.str();
}

std::string write_ecg_json(const EdgeColouredGraph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v, c] : g.edges()) j["edges"].push_back({u, v, c});
    return j.dump();
}

EdgeColouredGraph parse_ecg_json(const std::string& text) {
    try {
        json j = json::parse(text);
        EdgeColouredGraph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges"))
            g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long>());
        return g;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

std::string write_digraph_json(const Digraph& d) {
    json j;
    j["n"] = d.n();
    j["arcs"] = json::array();
    for (auto [u, v] : d.arcs()) j["arcs"].push_back({u, v});
    return j.dump();
}

Digraph parse_digraph_json(const std::string& text) {
    try {
        json j = json::parse(text);
        Digraph d(j.at("n").get<int>());
        for (const auto& a : j.at("arcs")) d.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
        return d;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

std::string write_weighting(const std::map<int, Rational>& w) {
    std::ostringstream out;
    for (const auto& [v, q] : w) out << "w " << v << " " << q.get_str() << "\n";
    return out.str();
}

std::map<int, Rational> parse_weighting(std::istream& in) {
    std::map<int, Rational> w;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (toks[0] != "w" || toks.size() != 3) throw ParseError("expected 'w <v> <p/q>'", lineno);
        int v = parse_int(toks[1], lineno);
        if (w.count(v)) throw ParseError("duplicate vertex " + toks[1], lineno);
        try {
            w[v] = parse_rational(toks[2]);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return w;
}

std::map<int, Rational> parse_weighting_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_weighting(ss);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

EdgeColouredGraph load_ecg(const std::string& path) {
    std::string text = read_file(path);
    if (!text.empty() && text[0] == '{') return parse_ecg_json(text);
    return parse_ecg_string(text);
}

Digraph load_digraph(const std::string& path) {
    std::string text = read_file(path);
    if (!text.empty() && text[0] == '{') return parse_digraph_json(text);
    return parse_digraph_string(text);
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string roundtrip_check(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream probe(text);
    std::string head;
    probe >> head;
    if (head == "ecg" || (!text.empty() && text[0] == '{' && text.find("\"edges\"") != std::string::npos)) {
        EdgeColouredGraph g = text[0] == '{' ? parse_ecg_json(text) : parse_ecg_string(text);
        EdgeColouredGraph again = text[0] == '{' ? parse_ecg_json(write_ecg_json(g)) : parse_ecg_string(write_ecg(g));
        if (!(g == again)) throw ParseError("round-trip mismatch for " + path);
        return "edge-coloured graph, n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.edge_count());
    }
    if (head == "dg" || (!text.empty() && text[0] == '{' && text.find("\"arcs\"") != std::string::npos)) {
        Digraph d = text[0] == '{' ? parse_digraph_json(text) : parse_digraph_string(text);
        Digraph again = text[0] == '{' ? parse_digraph_json(write_digraph_json(d)) : parse_digraph_string(write_digraph(d));
        if (!(d == again)) throw ParseError("round-trip mismatch for " + path);
        return "digraph, n=" + std::to_string(d.n()) + ", arcs=" + std::to_string(d.arc_count());
    }
    if (head == "w") {
        auto w = parse_weighting_string(text);
        auto again = parse_weighting_string(write_weighting(w));
        if (w != again) throw ParseError("round-trip mismatch for " + path);
        return "vertex weighting on " + std::to_string(w.size()) + " vertices";
    }
    throw ParseError("unrecognized format in " + path);
}

}  // namespace rt
