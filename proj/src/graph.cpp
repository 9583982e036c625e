// graph.cpp

#include "comdet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace comdet {

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::optional<int> Graph::find_vertex(std::string_view label) const {
    if (!is_bipartite()) {
        auto it = index_.find(std::string(label));
        if (it != index_.end()) return it->second;
        return std::nullopt;
    }
    if (auto top = find_vertex(label, Part::top)) return top;
    return find_vertex(label, Part::bottom);
}

std::optional<int> Graph::find_vertex(std::string_view label, Part part) const {
    std::string key = (part == Part::top ? "T\x1f" : "B\x1f") + std::string(label);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    return std::nullopt;
}

std::string GraphBuilder::key(const std::string& label, Part part) const {
    if (!bipartite_) return label;
    return (part == Part::top ? "T\x1f" : "B\x1f") + label;
}

int GraphBuilder::vertex(const std::string& label, Part part) {
    auto k = key(label, part);
    auto it = g_.index_.find(k);
    if (it != g_.index_.end()) return it->second;
    int id = g_.vertex_count();
    g_.index_.emplace(std::move(k), id);
    g_.labels_.push_back(label);
    g_.adjacency_.emplace_back();
    if (bipartite_) g_.parts_.push_back(part);
    return id;
}

int GraphBuilder::add_vertex(const std::string& label, Part part) {
    if (g_.index_.count(key(label, part)))
        throw InputError("vertex '" + label + "' declared twice");
    return vertex(label, part);
}

bool GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw InputError("self-loop at vertex '" + g_.labels_[u] + "'");
    if (bipartite_ && g_.parts_[u] == g_.parts_[v])
        throw InputError("edge inside one part: '" + g_.labels_[u] + "' -- '" + g_.labels_[v] + "'");
    auto& au = g_.adjacency_[u];
    if (std::find(au.begin(), au.end(), v) != au.end()) return false;
    au.push_back(v);
    g_.adjacency_[v].push_back(u);
    g_.edges_.emplace_back(std::min(u, v), std::max(u, v));
    ++g_.m_;
    return true;
}

Graph GraphBuilder::build() {
    for (auto& a : g_.adjacency_) std::sort(a.begin(), a.end());
    long long degree_sum = 0;
    for (const auto& a : g_.adjacency_) degree_sum += static_cast<long long>(a.size());
    if (degree_sum != 2 * g_.m_)
        throw InvariantError("handshake violated: sum of degrees != 2m");
    return std::move(g_);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool looks_numeric(const std::string& s) {
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end != s.c_str() && *end == '\0';
}

}  // namespace

Graph load_edge_list(std::istream& in, InputFormat format, std::ostream* warnings) {
    const bool bipartite = format == InputFormat::bipartite;
    GraphBuilder b(bipartite);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            std::string msg = "line " + std::to_string(lineno) + ": expected 2 vertex labels, got " +
                              std::to_string(tokens.size()) + " tokens";
            if (tokens.size() == 3 && looks_numeric(tokens[2]))
                msg += " (weighted edges are not supported; this tool handles binary graphs only)";
            throw InputError(msg);
        }
        int u = b.vertex(tokens[0], Part::top);
        int v = b.vertex(tokens[1], Part::bottom);
        try {
            if (!b.add_edge(u, v) && warnings)
                *warnings << "warning: line " << lineno << ": duplicate edge " << tokens[0] << " -- "
                          << tokens[1] << " (ignored)\n";
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return b.build();
}

Graph load_edge_list_file(const std::filesystem::path& path, InputFormat format,
                          std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path.string());
    return load_edge_list(in, format, warnings);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) {
        if (g.is_bipartite() && g.part(u) == Part::bottom) std::swap(u, v);
        out << g.label(u) << '\t' << g.label(v) << '\n';
    }
}

}  // namespace comdet
