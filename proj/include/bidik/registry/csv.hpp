#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bidik/registry/applicant.hpp"

namespace bidik::registry {

struct CsvRecord {
    std::size_t line = 0;  // 1-based line where the record starts
    std::vector<std::string> fields;
};

/// RFC 4180 framing: comma separated, double-quote escaping, LF or CRLF line
/// ends, optional UTF-8 BOM. Blank lines are skipped. Throws Error(MalformedCsv)
/// on an unterminated quote or text after a closing quote.
std::vector<CsvRecord> parse_csv(std::string_view bytes);

/// Quotes a field when it contains a comma, quote, or line break.
std::string csv_escape(std::string_view field);

struct RowError {
    std::size_t line = 0;
    std::string nim;
    std::string reason;
};

struct IngestResult {
    std::vector<ApplicantRecord> accepted;
    std::vector<RowError> rejected;
    std::size_t rows_in = 0;  // == accepted.size() + rejected.size()
};

/// Canonical header set; matched case-insensitively after alias resolution.
inline constexpr std::string_view kCanonicalColumns[] = {"nama",  "nim",   "jurusan",     "semester",
                                                         "tahun", "nilai", "penghasilan", "tanggungan"};

/// Maps a header cell to its canonical column name ("" when unrecognized).
/// Aliases: name, nama pemohon -> nama; program, major -> jurusan; smt -> semester;
/// year, tahun beasiswa -> tahun; gpa, ipk -> nilai; income, penghasilan orang tua -> penghasilan;
/// dependents, jml tanggungan, jml tggungan -> tanggungan.
std::string canonical_column(std::string_view header);

/// Reads applicants from CSV. Rows that fail to parse or validate, repeat an
/// earlier nim, or (when period_year is given) belong to another year are
/// reported with their line number and never abort the batch.
/// Throws Error(MalformedCsv) for broken framing or an empty document and
/// Error(MissingColumn) when a canonical column is absent.
IngestResult ingest_applicants_csv(std::string_view bytes, std::optional<int> period_year = std::nullopt);

}  // namespace bidik::registry
