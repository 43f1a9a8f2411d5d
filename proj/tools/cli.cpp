#include "cli.hpp"

#include "kummer/classifier.hpp"
#include "kummer/errors.hpp"
#include "kummer/identities.hpp"
#include "kummer/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace kummer::cli {

namespace {

struct Outcome {
    int code = kOk;
    std::string text;
    std::string error_kind;
    std::string message;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// The rendering variable: --var if given, else the input's identifier, else x.
Outcome classify_text(const std::string& expr, const std::string& variable, ReportFormat format) {
    Outcome o;
    try {
        const auto parsed = parse_expression(expr);
        std::string var = variable;
        if (var.empty()) var = parsed.variable.value_or("x");
        if (!variable.empty() && parsed.variable && *parsed.variable != variable)
            throw ParseError(expr.find(*parsed.variable),
                             "expected the variable '" + variable + "', found '" + *parsed.variable + "'");
        o.text = render_report(classify(evaluate(*parsed.ast), var), format);
    } catch (const ParseError& e) {
        o = {kSyntaxError, "", "syntax_error", e.what()};
    } catch (const UnsupportedPoles& e) {
        o = {kUnsupported, "", "unsupported_poles", e.what()};
    } catch (const UnsupportedInput& e) {
        o = {kUnsupported, "", "unsupported_input", e.what()};
    } catch (const std::exception& e) {
        o = {kInternalError, "", "internal_error", e.what()};
    }
    return o;
}

bool write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

} // namespace

std::string classify_line(const std::string& line, const std::string& variable, int& code) {
    const Outcome o = classify_text(line, variable, ReportFormat::Json);
    code = o.code;
    if (o.code == kOk) return o.text;
    nlohmann::ordered_json j;
    j["input"] = line;
    j["error"] = o.error_kind;
    j["message"] = o.message;
    return j.dump();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification of the Kummer groupoid of a rational projective structure"};
    app.require_subcommand(1);

    std::string expr, variable, format = "text", out_path;
    auto* classify_cmd = app.add_subcommand("classify", "classify one rational function R");
    classify_cmd->add_option("--R", expr, "R as a rational function, e.g. -4/x^2")->required();
    classify_cmd->add_option("--var", variable, "name of the variable");
    classify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    classify_cmd->add_option("--out", out_path, "write the report to this file");

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* batch_cmd = app.add_subcommand("batch", "classify one expression per stdin line, one JSON object per line");
    batch_cmd->add_option("--var", variable, "name of the variable");
    batch_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    batch_cmd->add_option("--out", out_path, "write the results to this file");

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "verify the symbolic identities");
    selfcheck_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kSyntaxError;
    }

    if (*classify_cmd) {
        const Outcome o = classify_text(expr, variable, format == "json" ? ReportFormat::Json : ReportFormat::Text);
        if (o.code != kOk) {
            err << "error (" << o.error_kind << "): " << o.message << "\n";
            return o.code;
        }
        std::string text = o.text;
        if (format == "json") text += "\n";
        return write_output(out_path, text, out, err) ? kOk : kInternalError;
    }

    if (*batch_cmd) {
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);) {
            line = trim(line);
            if (!line.empty() && line[0] != '#') lines.push_back(line);
        }
        std::vector<std::string> results(lines.size());
        std::vector<int> codes(lines.size(), kOk);
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (std::size_t i; (i = next++) < lines.size();) results[i] = classify_line(lines[i], variable, codes[i]);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, lines.size()); ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        std::string text;
        for (const auto& r : results) text += r + "\n";
        if (!write_output(out_path, text, out, err)) return kInternalError;
        return codes.empty() ? kOk : *std::max_element(codes.begin(), codes.end());
    }

    const auto results = verify_identities();
    if (format == "json") {
        out << render_identities(results);
    } else {
        for (const auto& r : results)
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    return all ? kOk : kInternalError;
}

} // namespace kummer::cli
