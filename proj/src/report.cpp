#include "jensenlab/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace jensenlab {

namespace {

bool needs_quotes(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
    if (!needs_quotes(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string format_mpfr_decimal(mpfr_srcptr x, std::size_t digits,
                                mpfr_rnd_t rnd) {
    if (mpfr_zero_p(x)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, x, rnd);
    std::string body(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!body.empty() && body[0] == '-') {
        sign = "-";
        body.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    std::size_t last = body.find_last_not_of('0');
    if (last != std::string::npos) body.erase(last + 1);
    if (body.empty()) body = "0";
    std::string out = sign + body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::to_string(static_cast<long>(e - 1));
    return out;
}

}  // namespace

std::string ball_mid_decimal(const Ball& b) {
    std::size_t digits =
        static_cast<std::size_t>(std::ceil(static_cast<double>(b.prec()) * 0.30103)) + 2;
    return format_mpfr_decimal(b.mid().get(), digits, MPFR_RNDN);
}

std::string ball_rad_decimal(const Ball& b) {
    if (b.is_exact()) return "0";
    return format_mpfr_decimal(b.rad().get(), 6, MPFR_RNDU);
}

void write_csv(std::ostream& os, const Table& t) {
    os << "# schema=" << t.schema << "\n";
    for (const auto& c : t.comments) os << "# " << c << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(row[i]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json j;
    j["schema"] = t.schema;
    j["comments"] = t.comments;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    os << j.dump(2) << "\n";
}

void write_table(const std::string& path, const std::string& format,
                 const Table& t) {
    auto emit = [&](std::ostream& os) {
        if (format == "json")
            write_json(os, t);
        else
            write_csv(os, t);
    };
    if (path.empty() || path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + path);
    emit(f);
}

}  // namespace jensenlab
