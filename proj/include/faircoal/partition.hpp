// Ordered vertex partitions and their text format: one class per line,
// space-separated 0-based vertex ids; blank lines and '#' comments ignored.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "faircoal/errors.hpp"
#include "faircoal/graph.hpp"

namespace faircoal {

struct Partition {
    std::vector<VertexSet> classes;

    int size() const { return static_cast<int>(classes.size()); }

    VertexSet support() const {
        VertexSet u;
        for (VertexSet c : classes) u |= c;
        return u;
    }

    std::vector<std::vector<int>> to_vectors() const {
        std::vector<std::vector<int>> out;
        out.reserve(classes.size());
        for (VertexSet c : classes) out.push_back(c.to_vector());
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (VertexSet c : classes) {
            bool sep = false;
            for (int v : c) {
                if (sep) s += ' ';
                s += std::to_string(v);
                sep = true;
            }
            s += '\n';
        }
        return s;
    }
};

inline Partition parse_partition(const std::string& text) {
    Partition p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        VertexSet cls;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 0)
                throw parse_error(parse_error::Kind::bad_token,
                                  "line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
            if (v >= kMaxOrder)
                throw parse_error(parse_error::Kind::vertex_out_of_range,
                                  "line " + std::to_string(lineno) + ": vertex id " +
                                      std::to_string(v) + " exceeds the order cap");
            cls.add(v);
        }
        if (!cls.empty()) p.classes.push_back(cls);
    }
    return p;
}

}  // namespace faircoal
