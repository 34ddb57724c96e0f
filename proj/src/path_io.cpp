#include "cowpath/path_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cowpath/vec.hpp"

namespace cowpath {

namespace {

using nlohmann::json;

std::string read_all(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Polyline parse_json_path(const std::string& text, const std::string& name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(name + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("vertices")) {
        throw std::runtime_error(name + ": expected {\"dimension\", \"vertices\"}");
    }
    const auto dim = doc["dimension"].get<std::int64_t>();
    if (dim < 1) throw std::runtime_error(name + ": dimension must be >= 1");
    std::vector<Vec> verts;
    for (const auto& row : doc["vertices"]) {
        std::vector<double> coords;
        for (const auto& x : row) coords.push_back(x.get<double>());
        if (coords.size() != static_cast<std::size_t>(dim)) {
            throw std::runtime_error(name + ": vertex " + std::to_string(verts.size()) +
                                     " has " + std::to_string(coords.size()) +
                                     " coordinates, expected " + std::to_string(dim));
        }
        verts.emplace_back(std::move(coords));
    }
    if (verts.empty()) throw std::runtime_error(name + ": no vertices");
    return Polyline(std::move(verts));
}

Polyline parse_csv_path(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    std::vector<Vec> verts;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (lineno == 1) {
            dim = cells.size();
            if (dim < 1 || cells[0] != "x1") {
                throw std::runtime_error(name + ":1: expected header x1,...,xd");
            }
            continue;
        }
        if (cells.size() != dim) {
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": expected " + std::to_string(dim) + " columns");
        }
        std::vector<double> coords;
        for (const std::string& c : cells) {
            try {
                std::size_t used = 0;
                coords.push_back(std::stod(c, &used));
                if (used != c.size()) throw std::invalid_argument(c);
            } catch (const std::exception&) {
                throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                         ": bad number '" + c + "'");
            }
        }
        verts.emplace_back(std::move(coords));
    }
    if (verts.empty()) throw std::runtime_error(name + ": no vertices");
    return Polyline(std::move(verts));
}

} // namespace

Polyline load_path(const std::filesystem::path& file) {
    const std::string text = read_all(file);
    try {
        if (file.extension() == ".csv") return parse_csv_path(text, file.string());
        return parse_json_path(text, file.string());
    } catch (const std::invalid_argument& e) {
        // Polyline constructor rejects (origin start, mixed dims, non-finite).
        throw std::runtime_error(file.string() + ": " + e.what());
    }
}

void save_path_json(const Polyline& path, const std::filesystem::path& file) {
    json doc;
    doc["dimension"] = path.dim();
    json verts = json::array();
    for (const Vec& v : path.vertices()) verts.push_back(v.coords());
    doc["vertices"] = std::move(verts);
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << doc.dump(2) << "\n";
}

void save_path_csv(const Polyline& path, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    for (std::size_t i = 0; i < path.dim(); ++i) {
        out << (i ? "," : "") << "x" << (i + 1);
    }
    out << "\n";
    char buf[40];
    for (const Vec& v : path.vertices()) {
        for (std::size_t i = 0; i < path.dim(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", v[i]);
            out << (i ? "," : "") << buf;
        }
        out << "\n";
    }
}

void save_path(const Polyline& path, const std::filesystem::path& file) {
    if (file.extension() == ".csv") {
        save_path_csv(path, file);
    } else {
        save_path_json(path, file);
    }
}

std::string file_digest(const std::filesystem::path& file) {
    const std::string bytes = read_all(file);
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace cowpath
