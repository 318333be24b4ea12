#include <algorithm>
#include <map>
#include <sstream>

#include "bidik/cli/cli.hpp"
#include "bidik/core/format.hpp"
#include "bidik/registry/csv.hpp"

namespace bidik::cli {

namespace {

constexpr int kTableDecimals = 6;

/// Left-aligns the first `left` columns, right-aligns the rest, two spaces apart.
std::string layout(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                   std::size_t left) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    const auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto pad = std::string(width[c] - cells[c].size(), ' ');
            if (c > 0) text += "  ";
            text += c < left ? cells[c] + pad : pad + cells[c];
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::map<std::string, const registry::ApplicantRecord*> by_nim(const registry::SelectionRun& run) {
    std::map<std::string, const registry::ApplicantRecord*> out;
    for (const auto& a : run.applicants) out.emplace(a.nim, &a);
    return out;
}

std::string name_of(const std::map<std::string, const registry::ApplicantRecord*>& names, const std::string& nim) {
    const auto it = names.find(nim);
    return it == names.end() ? std::string{} : it->second->name;
}

std::size_t row_index(const Matrix& m, const std::string& id) {
    const auto& ids = m.alternatives();
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

std::string matrix_table(const Matrix& m, bool fixed) {
    std::vector<std::string> header{"nim"};
    for (const auto& c : m.criteria()) header.push_back(c);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> r{m.alternatives()[i]};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r.push_back(fixed ? format_fixed(m(i, j), kTableDecimals) : format_number(m(i, j)));
        }
        rows.push_back(std::move(r));
    }
    return layout(header, rows, 1);
}

std::string render_table(const registry::SelectionRun& run, bool trace) {
    const auto& ev = run.evaluation;
    const auto names = by_nim(run);
    std::ostringstream os;

    if (trace) {
        std::vector<std::vector<std::string>> crit;
        for (std::size_t j = 0; j < run.criteria.size(); ++j) {
            const auto& c = run.criteria[j];
            crit.push_back({c.id, c.name, std::string(to_string(c.kind)), format_number(run.weights[j])});
        }
        os << "criteria\n" << layout({"id", "name", "kind", "weight"}, crit, 3) << '\n';
        os << "crisp matrix\n" << matrix_table(ev.crisp, false) << '\n';
        os << "normalized matrix\n" << matrix_table(ev.normalized, true) << '\n';
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& e : ev.ranking.entries) {
        const bool recipient = std::any_of(ev.recipients.begin(), ev.recipients.end(),
                                           [&](const RankEntry& r) { return r.id == e.id; });
        std::vector<std::string> r{std::to_string(e.rank), e.id, name_of(names, e.id)};
        if (trace) r.push_back(e.tie_break_applied ? "yes" : "no");
        r.push_back(recipient ? "yes" : "no");
        r.push_back(format_fixed(e.score, kTableDecimals));
        rows.push_back(std::move(r));
    }
    std::vector<std::string> header{"rank", "nim", "name"};
    if (trace) header.push_back("tie");
    header.push_back("recipient");
    header.push_back("V");
    if (trace) os << "ranking\n";
    os << layout(header, rows, header.size() - 1);

    if (!ev.ineligible.empty()) {
        std::vector<std::vector<std::string>> inel;
        for (const auto& x : ev.ineligible) {
            inel.push_back({x.id, name_of(names, x.id), x.criterion_id, format_number(x.raw), x.reason});
        }
        os << "\nineligible\n" << layout({"nim", "name", "criterion", "raw", "reason"}, inel, 5);
    }
    return os.str();
}

std::string render_csv(const registry::SelectionRun& run, bool trace) {
    const auto& ev = run.evaluation;
    const auto names = by_nim(run);
    std::ostringstream os;
    os << "rank,nim,name";
    if (trace) {
        for (const auto& c : ev.crisp.criteria()) os << ',' << registry::csv_escape("x_" + c);
        for (const auto& c : ev.crisp.criteria()) os << ',' << registry::csv_escape("r_" + c);
        os << ",tie_break_applied";
    }
    os << ",score,recipient\n";
    for (const auto& e : ev.ranking.entries) {
        const bool recipient = std::any_of(ev.recipients.begin(), ev.recipients.end(),
                                           [&](const RankEntry& r) { return r.id == e.id; });
        os << e.rank << ',' << registry::csv_escape(e.id) << ',' << registry::csv_escape(name_of(names, e.id));
        if (trace) {
            const auto i = row_index(ev.crisp, e.id);
            for (std::size_t j = 0; j < ev.crisp.cols(); ++j) os << ',' << format_number(ev.crisp(i, j));
            for (std::size_t j = 0; j < ev.normalized.cols(); ++j) os << ',' << format_number(ev.normalized(i, j));
            os << ',' << (e.tie_break_applied ? "true" : "false");
        }
        os << ',' << format_number(e.score) << ',' << (recipient ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace

std::string render_run(const registry::SelectionRun& run, OutputFormat format, bool trace) {
    switch (format) {
        case OutputFormat::Json:
            return registry::run_to_json(run).dump(2) + "\n";
        case OutputFormat::Csv:
            return render_csv(run, trace);
        case OutputFormat::Table:
            break;
    }
    return render_table(run, trace);
}

}  // namespace bidik::cli
