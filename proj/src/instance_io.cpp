#include "ccp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccp {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

Instance read_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    bool have_offset = false;
    double offset = 0;
    std::vector<std::tuple<int, int, double>> edges;
    std::vector<std::tuple<int, int, int, double>> triples;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;

        if (!have_header) {
            if (tag != "CCC") fail(line_no, "expected header 'CCC <vertex_count>'");
            if (!(ls >> n) || n < 0) fail(line_no, "invalid vertex count");
            have_header = true;
        } else if (tag == "c") {
            if (have_offset) fail(line_no, "duplicate offset line");
            if (!(ls >> offset)) fail(line_no, "invalid offset value");
            have_offset = true;
        } else if (tag == "e") {
            int p, q;
            double c;
            if (!(ls >> p >> q >> c)) fail(line_no, "invalid edge record");
            edges.emplace_back(p, q, c);
        } else if (tag == "t") {
            int p, q, r;
            double c;
            if (!(ls >> p >> q >> r >> c)) fail(line_no, "invalid triple record");
            triples.emplace_back(p, q, r, c);
        } else {
            fail(line_no, "unknown record '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) fail(line_no, "trailing content '" + rest + "'");
    }
    if (!have_header) throw std::runtime_error("line 1: missing header 'CCC <vertex_count>'");

    try {
        return Instance(n, std::move(edges), std::move(triples), offset);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid instance: ") + e.what());
    }
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "CCC " << inst.vertex_count() << "\n";
    out << "c " << format_number(inst.offset()) << "\n";
    for (int e = 0; e < inst.edge_count(); ++e) {
        const Edge& ed = inst.edge(e);
        out << "e " << ed.u << " " << ed.v << " " << format_number(inst.edge_cost(e)) << "\n";
    }
    for (int t = 0; t < inst.triple_count(); ++t) {
        const Triple& tr = inst.triple(t);
        out << "t " << tr.u << " " << tr.v << " " << tr.w << " "
            << format_number(inst.triple_cost(t)) << "\n";
    }
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_instance(out, inst);
}

std::string instance_to_string(const Instance& inst) {
    std::ostringstream ss;
    write_instance(ss, inst);
    return ss.str();
}

void write_multicut(std::ostream& out, const MulticutInstance& mc) {
    out << "CMC " << mc.vertex_count << "\n";
    out << "C " << format_number(mc.constant) << "\n";
    for (std::size_t e = 0; e < mc.edges.size(); ++e)
        out << "z " << mc.edges[e].u << " " << mc.edges[e].v << " "
            << format_number(mc.edge_costs[e]) << "\n";
    for (std::size_t t = 0; t < mc.triples.size(); ++t)
        out << "y " << mc.triples[t].u << " " << mc.triples[t].v << " " << mc.triples[t].w << " "
            << format_number(mc.triple_costs[t]) << "\n";
}

}  // namespace ccp
