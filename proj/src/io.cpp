#include "fairclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fairclust {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::uint64_t parse_u64(const std::string& path, std::size_t lineno, const std::string& field) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw IoError(path + ":" + std::to_string(lineno) + ": malformed field '" + field + "'");
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

struct Row {
    std::uint64_t point;
    std::vector<std::uint64_t> values;  // color first, then cluster column(s)
};

// Shared reader for "point,color,<cluster columns>" tables.
std::vector<Row> read_table(const std::string& path, const std::string& header, std::size_t columns) {
    const auto lines = read_lines(path);
    if (lines.empty() || lines[0] != header)
        throw IoError(path + ": expected header '" + header + "'");
    std::vector<Row> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        const auto fields = split_csv(lines[i]);
        if (fields.size() != columns)
            throw IoError(path + ":" + std::to_string(i + 1) + ": expected " + std::to_string(columns) +
                          " fields, got " + std::to_string(fields.size()));
        Row row;
        row.point = parse_u64(path, i + 1, fields[0]);
        for (std::size_t f = 1; f < fields.size(); ++f) row.values.push_back(parse_u64(path, i + 1, fields[f]));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError(path + ": no points");
    return rows;
}

// Builds dense colors + one normalized clustering per cluster column.
void assemble(const std::string& path, const std::vector<Row>& rows, ColorAssignment& colors,
              std::vector<Clustering>& clusterings, std::size_t cluster_columns) {
    const std::size_t n = rows.size();
    std::vector<bool> seen(n, false);
    colors.color.assign(n, 0);
    std::vector<std::vector<std::pair<PointId, std::uint64_t>>> labeled(cluster_columns);
    std::uint64_t max_color = 0;
    for (const Row& row : rows) {
        if (row.point >= n)
            throw IoError(path + ": gap in point ids (found id " + std::to_string(row.point) + " among " +
                          std::to_string(n) + " rows)");
        const PointId v = static_cast<PointId>(row.point);
        if (seen[v]) throw IoError(path + ": duplicate point " + std::to_string(row.point));
        seen[v] = true;
        colors.color[v] = static_cast<ColorId>(row.values[0]);
        max_color = std::max(max_color, row.values[0]);
        for (std::size_t col = 0; col < cluster_columns; ++col) labeled[col].emplace_back(v, row.values[col + 1]);
    }
    colors.color_count = static_cast<ColorId>(max_color + 1);
    try {
        validate(colors);
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
    clusterings.clear();
    for (auto& lab : labeled) clusterings.push_back(normalize(lab));
}

}  // namespace

LabeledClustering read_clustering(const std::string& path) {
    const auto rows = read_table(path, "point,color,cluster", 3);
    LabeledClustering out;
    std::vector<Clustering> cs;
    assemble(path, rows, out.colors, cs, 1);
    out.clustering = std::move(cs[0]);
    return out;
}

void write_clustering(const std::string& path, const Clustering& c, const ColorAssignment& colors) {
    if (c.size() != colors.size())
        throw std::invalid_argument("write_clustering: clustering and colors over different point sets");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << "point,color,cluster\n";
    for (PointId v = 0; v < c.size(); ++v)
        out << v << ',' << colors.color[v] << ',' << c.assign[v] << '\n';
    if (!out) throw IoError(path + ": write failed");
}

CorrelationInstance read_correlation(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": empty file");
    const auto head = split_csv(lines[0]);
    if (head.size() != 2 || head[0] != "nodes") throw IoError(path + ": expected first line 'nodes,N'");
    CorrelationInstance inst;
    inst.n = static_cast<std::uint32_t>(parse_u64(path, 1, head[1]));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        const auto fields = split_csv(lines[i]);
        if (fields.size() != 2) throw IoError(path + ":" + std::to_string(i + 1) + ": expected 'u,v'");
        inst.plus_edges.emplace_back(static_cast<PointId>(parse_u64(path, i + 1, fields[0])),
                                     static_cast<PointId>(parse_u64(path, i + 1, fields[1])));
    }
    try {
        validate(inst);
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
    return inst;
}

void write_correlation(const std::string& path, const CorrelationInstance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << "nodes," << inst.n << '\n';
    auto edges = inst.plus_edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << u << ',' << v << '\n';
    if (!out) throw IoError(path + ": write failed");
}

ConsensusFile read_consensus(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": empty file");
    const auto head = split_csv(lines[0]);
    if (head.size() < 3 || head[0] != "point" || head[1] != "color")
        throw IoError(path + ": expected header 'point,color,c1,...,cm'");
    const std::size_t m = head.size() - 2;
    for (std::size_t i = 0; i < m; ++i)
        if (head[2 + i] != "c" + std::to_string(i + 1))
            throw IoError(path + ": expected clustering column 'c" + std::to_string(i + 1) + "'");
    std::vector<Row> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        const auto fields = split_csv(lines[i]);
        if (fields.size() != head.size())
            throw IoError(path + ":" + std::to_string(i + 1) + ": expected " + std::to_string(head.size()) +
                          " fields");
        Row row;
        row.point = parse_u64(path, i + 1, fields[0]);
        for (std::size_t f = 1; f < fields.size(); ++f) row.values.push_back(parse_u64(path, i + 1, fields[f]));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError(path + ": no points");
    ConsensusFile out;
    assemble(path, rows, out.colors, out.instance.inputs, m);
    return out;
}

void write_consensus(const std::string& path, const std::vector<Clustering>& inputs, const ColorAssignment& colors) {
    if (inputs.empty()) throw std::invalid_argument("write_consensus: no input clusterings");
    for (const Clustering& c : inputs)
        if (c.size() != colors.size())
            throw std::invalid_argument("write_consensus: clustering and colors over different point sets");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << "point,color";
    for (std::size_t i = 1; i <= inputs.size(); ++i) out << ",c" << i;
    out << '\n';
    for (PointId v = 0; v < colors.size(); ++v) {
        out << v << ',' << colors.color[v];
        for (const Clustering& c : inputs) out << ',' << c.assign[v];
        out << '\n';
    }
    if (!out) throw IoError(path + ": write failed");
}

}  // namespace fairclust
