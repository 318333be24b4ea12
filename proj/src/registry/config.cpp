#include "bidik/registry/config.hpp"

#include <fstream>
#include <sstream>

#include "bidik/core/error.hpp"

namespace bidik::registry {

using nlohmann::json;

namespace {

json bound_to_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> bound_from_json(const json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<double>();
}

}  // namespace

json criteria_to_json(std::span<const CriterionSpec> criteria) {
    json list = json::array();
    for (const auto& c : criteria) {
        json intervals = json::array();
        for (const auto& e : c.table.entries) {
            json entry = {{"lower", e.lower}, {"upper", bound_to_json(e.upper)}, {"crisp", e.crisp}};
            if (e.upper_inclusive) {
                entry["upper_inclusive"] = true;
            }
            intervals.push_back(std::move(entry));
        }
        json item = {{"id", c.id},
                     {"name", c.name},
                     {"kind", std::string(to_string(c.kind))},
                     {"weight", c.weight},
                     {"field", c.field},
                     {"unit", c.table.domain_unit},
                     {"intervals", std::move(intervals)}};
        if (c.domain) {
            item["domain"] = {{"lower", c.domain->lower},
                              {"upper", bound_to_json(c.domain->upper)},
                              {"upper_inclusive", c.domain->upper_inclusive}};
        }
        list.push_back(std::move(item));
    }
    return {{"criteria", std::move(list)}};
}

std::vector<CriterionSpec> criteria_from_json(const json& doc) {
    std::vector<CriterionSpec> out;
    std::string where = "document";
    try {
        const auto& list = doc.at("criteria");
        if (!list.is_array()) {
            throw Error(ErrorCode::InvalidConfig, "'criteria' must be an array");
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            where = "criteria[" + std::to_string(k) + "]";
            const auto& item = list[k];
            CriterionSpec c;
            c.id = item.at("id").get<std::string>();
            c.name = item.value("name", c.id);
            const auto kind_text = item.value("kind", std::string("benefit"));
            const auto kind = parse_criterion_kind(kind_text);
            if (!kind) {
                throw Error(ErrorCode::InvalidConfig, where + ": kind must be 'benefit' or 'cost', got '" + kind_text + "'");
            }
            c.kind = *kind;
            c.weight = item.at("weight").get<double>();
            c.field = item.value("field", std::string{});
            c.table.domain_unit = item.value("unit", std::string{});
            if (item.contains("domain") && !item["domain"].is_null()) {
                const auto& d = item["domain"];
                c.domain = Domain{d.at("lower").get<double>(), bound_from_json(d.value("upper", json(nullptr))),
                                  d.value("upper_inclusive", false)};
            }
            const auto& intervals = item.at("intervals");
            for (std::size_t e = 0; e < intervals.size(); ++e) {
                where = "criteria[" + std::to_string(k) + "].intervals[" + std::to_string(e) + "]";
                const auto& iv = intervals[e];
                c.table.entries.push_back(Interval{iv.at("lower").get<double>(),
                                                   bound_from_json(iv.value("upper", json(nullptr))),
                                                   iv.at("crisp").get<int>(), iv.value("upper_inclusive", false)});
            }
            out.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, where + ": " + e.what());
    }
    return out;
}

std::vector<CriterionSpec> load_criteria_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read criteria file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, path.string() + ": " + e.what());
    }
    return criteria_from_json(doc);
}

}  // namespace bidik::registry
