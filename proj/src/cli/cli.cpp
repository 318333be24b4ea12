#include "bidik/cli/cli.hpp"

#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bidik/api/service.hpp"
#include "bidik/core/error.hpp"
#include "bidik/registry/config.hpp"
#include "bidik/registry/csv.hpp"
#include "bidik/registry/store.hpp"
#include "httplib.h"

namespace bidik::cli {

namespace {

struct IoFailure {
    std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoFailure{"cannot read " + path};
    }
    std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    if (file.bad()) {
        throw IoFailure{"error while reading " + path};
    }
    return bytes;
}

/// "0.4,0.3,0.1,0.2" -> weights. Throws Error(InvalidWeights) on text that is not a number list.
WeightVector parse_weights(const std::string& text) {
    std::vector<double> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            w.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidWeights, "--weights: '" + item + "' is not a number");
        }
    }
    if (w.empty()) {
        throw Error(ErrorCode::InvalidWeights, "--weights: no values given");
    }
    return WeightVector(std::move(w));
}

int exit_code_for(ErrorCode code) { return code == ErrorCode::Io ? kExitIo : kExitValidation; }

struct RankOptions {
    std::string applicants;
    std::string criteria;
    std::string weights;
    std::optional<std::size_t> top;
    std::optional<int> year;
    OutputFormat format = OutputFormat::Table;
    bool trace = false;
};

int command_rank(const RankOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        auto criteria = registry::load_criteria_file(opt.criteria);
        if (const auto issues = validate_criteria(criteria); !issues.empty()) {
            for (const auto& issue : issues) err << opt.criteria << ": " << issue << '\n';
            return kExitValidation;
        }
        auto weights = weights_of(criteria);
        if (!opt.weights.empty()) {
            weights = parse_weights(opt.weights);
            if (weights.size() != criteria.size()) {
                err << "--weights: expected " << criteria.size() << " values, got " << weights.size() << '\n';
                return kExitValidation;
            }
            if (const auto issues = validate_weights(weights); !issues.empty()) {
                for (const auto& issue : issues) err << "--weights: " << issue << '\n';
                return kExitValidation;
            }
        }

        const auto bytes = read_input(opt.applicants, in);
        const auto ingest = registry::ingest_applicants_csv(bytes, opt.year);
        for (const auto& r : ingest.rejected) {
            err << opt.applicants << ":" << r.line << ": " << (r.nim.empty() ? "" : r.nim + ": ") << r.reason << '\n';
        }
        if (ingest.accepted.empty()) {
            err << "no applicant rows accepted\n";
            return kExitValidation;
        }

        registry::PeriodRef period{opt.year.value_or(ingest.accepted.front().period_year),
                                   registry::kDefaultScholarshipKind};
        // Empty timestamp keeps output byte-identical across runs.
        const auto run = registry::compose_run(period, ingest.accepted, criteria, weights, opt.top, "");
        for (const auto& x : run.evaluation.ineligible) {
            err << "ineligible: " << x.id << ": " << x.reason << '\n';
        }
        if (run.evaluation.ranking.size() == 0) {
            err << "no eligible applicants\n";
            return kExitValidation;
        }
        out << render_run(run, opt.format, opt.trace);
        return kExitOk;
    } catch (const IoFailure& e) {
        err << e.message << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

int command_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        const auto criteria = registry::load_criteria_file(path);
        const auto issues = validate_criteria(criteria);
        for (const auto& issue : issues) out << path << ": " << issue << '\n';
        if (!issues.empty()) {
            return kExitValidation;
        }
        out << path << ": ok, " << criteria.size() << " criteria\n";
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

struct ServeOptions {
    std::string host = "0.0.0.0";
    int port = 8080;
    std::string data_dir = "data";
    std::string admin_user;
    std::string admin_password;
    std::string static_dir;
};

httplib::Server* g_server = nullptr;

extern "C" void on_signal(int) {
    if (g_server) g_server->stop();
}

int command_serve(const ServeOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.admin_user.empty() || opt.admin_password.empty()) {
        err << "serve: admin credentials are required (--admin-user/--admin-password or "
               "BIDIK_ADMIN_USER/BIDIK_ADMIN_PASSWORD)\n";
        return kExitValidation;
    }
    try {
        registry::Store store(opt.data_dir);
        api::ServiceConfig config{opt.admin_user, opt.admin_password, std::chrono::hours(8), std::nullopt};
        if (!opt.static_dir.empty()) config.static_dir = opt.static_dir;
        api::Service service(store, config);
        httplib::Server server;
        service.mount(server);
        if (!server.bind_to_port(opt.host, opt.port)) {
            err << "serve: cannot listen on " << opt.host << ":" << opt.port << '\n';
            return kExitIo;
        }
        g_server = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        out << "listening on " << opt.host << ":" << opt.port << ", data in " << opt.data_dir << std::endl;
        server.listen_after_bind();
        g_server = nullptr;
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::filesystem::filesystem_error& e) {
        err << e.what() << '\n';
        return kExitIo;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scholarship selection with fuzzy MADM and simple additive weighting", "bidik"};
    app.require_subcommand(1);

    RankOptions rank;
    auto* rank_cmd = app.add_subcommand("rank", "Rank an applicant CSV offline");
    rank_cmd->add_option("--applicants", rank.applicants, "Applicant CSV, or - for stdin")->required();
    rank_cmd->add_option("--criteria", rank.criteria, "Criteria configuration JSON")->required();
    rank_cmd->add_option("--weights", rank.weights, "Comma-separated weight override");
    rank_cmd->add_option("--top", rank.top, "Number of recipients (default: all eligible)");
    rank_cmd->add_option("--year", rank.year, "Keep only rows of this scholarship year");
    const std::map<std::string, OutputFormat> formats{
        {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
    rank_cmd->add_option("--format", rank.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    rank_cmd->add_flag("--trace", rank.trace, "Include criteria, crisp and normalized matrices");

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check a criteria configuration");
    validate_cmd->add_option("--criteria", validate_path, "Criteria configuration JSON")->required();

    ServeOptions serve;
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    serve_cmd->add_option("--host", serve.host, "Bind address")->envname("BIDIK_HOST")->capture_default_str();
    serve_cmd->add_option("--port", serve.port, "TCP port")->envname("BIDIK_PORT")->capture_default_str();
    serve_cmd->add_option("--data-dir", serve.data_dir, "Data directory")->envname("BIDIK_DATA_DIR")->capture_default_str();
    serve_cmd->add_option("--admin-user", serve.admin_user, "Admin user name")->envname("BIDIK_ADMIN_USER");
    serve_cmd->add_option("--admin-password", serve.admin_password, "Admin password")
        ->envname("BIDIK_ADMIN_PASSWORD");
    serve_cmd->add_option("--static-dir", serve.static_dir, "Serve files from this directory at /")
        ->envname("BIDIK_STATIC_DIR");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (rank_cmd->parsed()) return command_rank(rank, in, out, err);
    if (validate_cmd->parsed()) return command_validate(validate_path, out, err);
    return command_serve(serve, out, err);
}

}  // namespace bidik::cli
