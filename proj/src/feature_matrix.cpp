#include "tranet/feature_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "tranet/errors.hpp"

namespace tranet {

std::string to_string(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::degree: return "degree";
    case FeatureKind::indegree: return "indegree";
    case FeatureKind::outdegree: return "outdegree";
    case FeatureKind::clustering: return "clustering";
    case FeatureKind::pagerank: return "pagerank";
    case FeatureKind::latent: return "latent";
    }
    return "?";
}

std::string to_string(TransformTag tag) {
    switch (tag) {
    case TransformTag::raw: return "raw";
    case TransformTag::power_law: return "pl";
    case TransformTag::normalized_pagerank: return "npr";
    case TransformTag::identity: return "id";
    }
    return "?";
}

std::string ColumnSchema::name() const {
    if (kind == FeatureKind::latent) return "svd" + std::to_string(latent_index);
    return to_string(kind) + "." + to_string(transform) + ".r" + std::to_string(aggregation_round);
}

ColumnSchema ColumnSchema::parse(const std::string& name) {
    if (name.rfind("svd", 0) == 0) {
        ColumnSchema s;
        s.kind = FeatureKind::latent;
        s.transform = TransformTag::identity;
        try {
            s.latent_index = std::stoi(name.substr(3));
        } catch (const std::exception&) {
            throw DataError("unrecognized feature column name '" + name + "'");
        }
        return s;
    }
    const auto dot1 = name.find('.');
    const auto dot2 = name.find('.', dot1 == std::string::npos ? dot1 : dot1 + 1);
    if (dot1 == std::string::npos || dot2 == std::string::npos || name.size() < dot2 + 3 ||
        name[dot2 + 1] != 'r') {
        throw DataError("unrecognized feature column name '" + name + "'");
    }
    const std::string kind_s = name.substr(0, dot1);
    const std::string tag_s = name.substr(dot1 + 1, dot2 - dot1 - 1);
    ColumnSchema s;
    if (kind_s == "degree") s.kind = FeatureKind::degree;
    else if (kind_s == "indegree") s.kind = FeatureKind::indegree;
    else if (kind_s == "outdegree") s.kind = FeatureKind::outdegree;
    else if (kind_s == "clustering") s.kind = FeatureKind::clustering;
    else if (kind_s == "pagerank") s.kind = FeatureKind::pagerank;
    else throw DataError("unrecognized feature kind in column '" + name + "'");
    if (tag_s == "raw") s.transform = TransformTag::raw;
    else if (tag_s == "pl") s.transform = TransformTag::power_law;
    else if (tag_s == "npr") s.transform = TransformTag::normalized_pagerank;
    else if (tag_s == "id") s.transform = TransformTag::identity;
    else throw DataError("unrecognized transform tag in column '" + name + "'");
    try {
        s.aggregation_round = std::stoi(name.substr(dot2 + 2));
    } catch (const std::exception&) {
        throw DataError("unrecognized aggregation round in column '" + name + "'");
    }
    return s;
}

void FeatureMatrix::validate() const {
    if (schema.size() != columns.size())
        throw DataError("feature matrix: schema/column count mismatch");
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows())
            throw DataError("feature matrix: column '" + schema[c].name() + "' has wrong length");
        for (double v : columns[c]) {
            if (!std::isfinite(v))
                throw DataError("feature matrix: non-finite value in column '" + schema[c].name() + "'");
        }
    }
}

std::vector<std::string> FeatureMatrix::column_names() const {
    std::vector<std::string> names;
    names.reserve(schema.size());
    for (const auto& s : schema) names.push_back(s.name());
    return names;
}

std::int64_t FeatureMatrix::column_index(const std::string& name) const {
    for (std::size_t c = 0; c < schema.size(); ++c) {
        if (schema[c].name() == name) return static_cast<std::int64_t>(c);
    }
    return -1;
}

void FeatureMatrix::write_csv(std::ostream& os) const {
    os << "node_id";
    for (const auto& s : schema) os << ',' << s.name();
    os << '\n';
    char buf[64];
    for (std::size_t r = 0; r < rows(); ++r) {
        os << node_ids[r];
        for (const auto& col : columns) {
            std::snprintf(buf, sizeof(buf), "%.17g", col[r]);
            os << ',' << buf;
        }
        os << '\n';
    }
}

FeatureMatrix FeatureMatrix::read_csv(std::istream& is) {
    FeatureMatrix f;
    std::string line;
    if (!std::getline(is, line)) throw DataError("feature csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) header.push_back(tok);
    }
    if (header.empty() || header[0] != "node_id")
        throw DataError("feature csv: header must start with node_id");
    for (std::size_t c = 1; c < header.size(); ++c) {
        f.schema.push_back(ColumnSchema::parse(header[c]));
        f.columns.emplace_back();
    }

    std::int64_t line_number = 1;
    while (std::getline(is, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::size_t field = 0;
        while (std::getline(ss, tok, ',')) {
            if (field == 0) {
                f.node_ids.push_back(tok);
            } else {
                if (field > f.columns.size())
                    throw DataError("feature csv line " + std::to_string(line_number) +
                                    ": too many fields");
                try {
                    f.columns[field - 1].push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw DataError("feature csv line " + std::to_string(line_number) +
                                    ": bad number '" + tok + "'");
                }
            }
            ++field;
        }
        if (field != f.columns.size() + 1)
            throw DataError("feature csv line " + std::to_string(line_number) +
                            ": wrong field count");
    }
    f.validate();
    return f;
}

} // namespace tranet
