#include "bidik/registry/csv.hpp"

#include <array>
#include <map>
#include <set>

#include "bidik/core/error.hpp"
#include "text.hpp"

namespace bidik::registry {

std::vector<CsvRecord> parse_csv(std::string_view bytes) {
    if (bytes.substr(0, 3) == "\xEF\xBB\xBF") {
        bytes.remove_prefix(3);
    }

    std::vector<CsvRecord> records;
    CsvRecord current;
    std::string field;
    std::size_t line = 1;
    current.line = 1;
    std::size_t i = 0;
    const std::size_t n = bytes.size();

    const auto end_record = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        const bool blank = current.fields.size() == 1 && current.fields[0].empty();
        if (!blank) {
            records.push_back(std::move(current));
        }
        current = CsvRecord{};
    };

    while (i < n) {
        const char c = bytes[i];
        if (c == '"' && field.empty()) {
            const std::size_t open_line = line;
            ++i;
            bool closed = false;
            while (i < n) {
                if (bytes[i] == '"') {
                    if (i + 1 < n && bytes[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                if (bytes[i] == '\n') {
                    ++line;
                }
                field += bytes[i++];
            }
            if (!closed) {
                throw Error(ErrorCode::MalformedCsv,
                            "unterminated quoted field starting on line " + std::to_string(open_line));
            }
            if (i < n && bytes[i] != ',' && bytes[i] != '\n' && bytes[i] != '\r') {
                throw Error(ErrorCode::MalformedCsv, "unexpected text after closing quote on line " +
                                                         std::to_string(line));
            }
            continue;
        }
        if (c == ',') {
            current.fields.push_back(std::move(field));
            field.clear();
            ++i;
            continue;
        }
        if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < n && bytes[i + 1] == '\n') {
                ++i;
            }
            ++i;
            end_record();
            ++line;
            current.line = line;
            continue;
        }
        field += c;
        ++i;
    }
    if (!field.empty() || !current.fields.empty()) {
        end_record();
    }
    return records;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string canonical_column(std::string_view header) {
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"nama", "nama"},
        {"name", "nama"},
        {"nama pemohon", "nama"},
        {"nim", "nim"},
        {"jurusan", "jurusan"},
        {"program", "jurusan"},
        {"major", "jurusan"},
        {"semester", "semester"},
        {"smt", "semester"},
        {"tahun", "tahun"},
        {"year", "tahun"},
        {"tahun beasiswa", "tahun"},
        {"nilai", "nilai"},
        {"gpa", "nilai"},
        {"ipk", "nilai"},
        {"penghasilan", "penghasilan"},
        {"income", "penghasilan"},
        {"penghasilan orang tua", "penghasilan"},
        {"tanggungan", "tanggungan"},
        {"dependents", "tanggungan"},
        {"jml tanggungan", "tanggungan"},
        {"jml tggungan", "tanggungan"},
    };
    const auto key = to_lower(trim(header));
    const auto it = aliases.find(key);
    return it == aliases.end() ? std::string{} : it->second;
}

IngestResult ingest_applicants_csv(std::string_view bytes, std::optional<int> period_year) {
    const auto records = parse_csv(bytes);
    if (records.empty()) {
        throw Error(ErrorCode::MalformedCsv, "document has no header row");
    }

    std::map<std::string, std::size_t> column;
    const auto& header = records.front();
    for (std::size_t k = 0; k < header.fields.size(); ++k) {
        const auto name = canonical_column(header.fields[k]);
        if (name.empty()) {
            continue;
        }
        if (!column.emplace(name, k).second) {
            throw Error(ErrorCode::MalformedCsv, "column '" + name + "' appears more than once in the header");
        }
    }
    std::string missing;
    for (auto name : kCanonicalColumns) {
        if (!column.count(std::string(name))) {
            missing += missing.empty() ? "" : ", ";
            missing += name;
        }
    }
    if (!missing.empty()) {
        throw Error(ErrorCode::MissingColumn, "missing column(s): " + missing);
    }

    IngestResult result;
    std::set<std::string> seen;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        ++result.rows_in;
        const auto cell = [&](const char* name) -> std::string {
            return std::string(trim(rec.fields[column.at(name)]));
        };

        if (rec.fields.size() != header.fields.size()) {
            std::string nim;
            if (column.at("nim") < rec.fields.size()) {
                nim = cell("nim");
            }
            result.rejected.push_back({rec.line, nim,
                                       "expected " + std::to_string(header.fields.size()) + " fields, got " +
                                           std::to_string(rec.fields.size())});
            continue;
        }

        ApplicantRecord a;
        a.name = cell("nama");
        a.nim = cell("nim");
        a.program = cell("jurusan");
        std::vector<std::string> problems;
        if (auto v = parse_int(cell("semester"))) {
            a.semester = *v;
        } else {
            problems.push_back("semester '" + cell("semester") + "' is not an integer");
        }
        if (auto v = parse_int(cell("tahun"))) {
            a.period_year = *v;
        } else {
            problems.push_back("tahun '" + cell("tahun") + "' is not an integer");
        }
        if (auto v = parse_double(cell("nilai"))) {
            a.nilai = *v;
        } else {
            problems.push_back("nilai '" + cell("nilai") + "' is not a number");
        }
        if (auto v = parse_money(cell("penghasilan"))) {
            a.income = *v;
        } else {
            problems.push_back("penghasilan '" + cell("penghasilan") + "' is not an amount");
        }
        if (auto v = parse_int(cell("tanggungan"))) {
            a.dependents = *v;
        } else {
            problems.push_back("tanggungan '" + cell("tanggungan") + "' is not an integer");
        }
        if (problems.empty()) {
            for (const auto& [field, msg] : validate_applicant(a)) {
                problems.push_back(field + " " + msg);
            }
        }
        if (problems.empty() && period_year && a.period_year != *period_year) {
            problems.push_back("tahun " + std::to_string(a.period_year) + " does not match period " +
                               std::to_string(*period_year));
        }
        if (problems.empty() && !seen.insert(a.nim).second) {
            problems.push_back("duplicate nim " + a.nim);
        }

        if (problems.empty()) {
            result.accepted.push_back(std::move(a));
        } else {
            std::string reason;
            for (std::size_t k = 0; k < problems.size(); ++k) {
                reason += (k ? "; " : "") + problems[k];
            }
            result.rejected.push_back({rec.line, a.nim, std::move(reason)});
        }
    }
    return result;
}

}  // namespace bidik::registry
