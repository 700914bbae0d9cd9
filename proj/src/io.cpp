#include "hofnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hofnet/errors.hpp"

namespace hofnet {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string complex_to_json(const PureComplex& c) {
    ordered_json j;
    j["k"] = c.params().k;
    j["m"] = c.params().m;
    j["t"] = c.params().t;
    j["seed"] = c.params().seed;

    ordered_json nodes = ordered_json::array();
    const auto& roles = c.skeleton().roles();
    for (std::size_t i = 0; i < roles.size(); ++i) {
        nodes.push_back({{"id", i},
                         {"role", to_string(roles[i].kind)},
                         {"birth", roles[i].birth_time}});
    }
    j["nodes"] = std::move(nodes);

    ordered_json edges = ordered_json::array();
    for (auto [u, v] : c.skeleton().edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);

    ordered_json facets = ordered_json::array();
    for (const Simplex& f : c.facets()) facets.push_back(f.vertices());
    j["facets"] = std::move(facets);

    return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

void write_complex_json(const PureComplex& c, const std::filesystem::path& path) {
    write_text_file(path, complex_to_json(c));
}

PureComplex read_complex_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("invalid complex JSON in " + path.string() + ": " + e.what());
    }
    try {
        GeneratorParams p;
        p.k = j.at("k").get<int>();
        p.m = j.at("m").get<int>();
        p.t = j.at("t").get<int>();
        p.seed = j.at("seed").get<std::uint64_t>();

        const auto& jn = j.at("nodes");
        std::vector<NodeRole> roles(jn.size());
        for (const auto& node : jn) {
            const auto id = node.at("id").get<std::size_t>();
            if (id >= roles.size()) throw std::invalid_argument("node id out of range");
            roles[id] = {node_kind_from_string(node.at("role").get<std::string>()),
                         node.at("birth").get<std::uint32_t>()};
        }
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
        std::vector<Simplex> facets;
        for (const auto& f : j.at("facets"))
            facets.emplace_back(f.get<std::vector<NodeId>>());

        Skeleton g(roles.size(), std::move(edges), std::move(roles));
        return PureComplex(p.k, p, std::move(g), std::move(facets));
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError("malformed complex in " + path.string() + ": " + e.what());
    }
}

void write_skeleton_tsv(const Skeleton& g, const std::filesystem::path& path) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << '\t' << v << '\n';
    write_text_file(path, out.str());
}

void write_boxdim_csv(const BoxCoveringResult& r, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "l_B,mean_N_B,std_N_B,trials\n";
    for (const CoverSample& s : r.samples)
        out << s.box_size << ',' << format_double(s.mean_boxes) << ','
            << format_double(s.std_boxes) << ',' << s.trials << '\n';
    write_text_file(path, out.str());
}

void write_gdd_csv(const DegreeDistribution& d, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "k,count,probability\n";
    for (const DegreePoint& pt : d.points)
        out << pt.degree.get_str() << ',' << pt.count.get_str() << ','
            << format_double(pt.probability) << '\n';
    write_text_file(path, out.str());
}

} // namespace hofnet
