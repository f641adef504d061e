#include "gyrolab/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gyrolab/errors.hpp"
#include "gyrolab/mobius.hpp"

namespace gyrolab {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw format_error("cannot write file: " + path);
    out << text;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string format_complex(std::complex<double> z) {
    const double re = z.real(), im = z.imag();
    if (im == 0.0) return format_double(re);
    std::string imag = format_double(im) + "i";
    if (re == 0.0) return imag;
    return im < 0.0 ? format_double(re) + imag : format_double(re) + "+" + imag;
}

namespace {

double parse_number(std::string_view tok, std::string_view whole) {
    if (tok.empty() || tok == "+") return 1.0;  // bare "i" / "+i"
    if (tok == "-") return -1.0;                // "-i"
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw format_error("bad complex literal: '" + std::string(whole) + "'");
    return v;
}

} // namespace

std::complex<double> parse_complex(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw format_error("empty complex literal");

    // split at the last top-level '+'/'-' that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E')
            split = i;
    }
    auto is_imag = [](std::string_view tok) { return !tok.empty() && tok.back() == 'i'; };
    if (split == std::string::npos) {
        if (is_imag(t)) return {0.0, parse_number(std::string_view(t).substr(0, t.size() - 1), s)};
        return {parse_number(t, s), 0.0};
    }
    std::string_view a = std::string_view(t).substr(0, split);
    std::string_view b = std::string_view(t).substr(split);
    if (!is_imag(b)) {
        if (is_imag(a))  // "bi+a" is not accepted; keep the format one-way
            throw format_error("bad complex literal: '" + std::string(s) + "'");
        return {parse_number(t, s), 0.0};  // e.g. "1e-3" with split at exponent-less '-'
    }
    return {parse_number(a, s), parse_number(b.substr(0, b.size() - 1), s)};
}

std::string format_vec3(const Vec3& v) {
    return format_double(v[0]) + "," + format_double(v[1]) + "," + format_double(v[2]);
}

Vec3 parse_vec3(std::string_view s) {
    Vec3 v{};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = i < 2 ? s.find(',', start) : s.size();
        if (comma == std::string_view::npos)
            throw format_error("bad vector literal (want x,y,z): '" + std::string(s) + "'");
        std::string tok(s.substr(start, comma - start));
        std::string trimmed;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        double x = 0.0;
        auto [p, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), x);
        if (ec != std::errc{} || p != trimmed.data() + trimmed.size())
            throw format_error("bad vector literal: '" + std::string(s) + "'");
        v[static_cast<std::size_t>(i)] = x;
        start = comma + 1;
    }
    return v;
}

std::string points_csv(const std::vector<std::complex<double>>& pts) {
    std::string out = "re,im\n";
    for (const auto& p : pts)
        out += format_double(p.real()) + "," + format_double(p.imag()) + "\n";
    return out;
}

std::string points_csv(const std::vector<Vec3>& pts) {
    std::string out = "x,y,z\n";
    for (const auto& p : pts) out += format_vec3(p) + "\n";
    return out;
}

std::string points_csv(const std::vector<int>& pts) {
    std::string out = "index\n";
    for (int p : pts) out += std::to_string(p) + "\n";
    return out;
}

std::string points_csv(const std::vector<long long>& pts) {
    std::string out = "index\n";
    for (long long p : pts) out += std::to_string(p) + "\n";
    return out;
}

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text,
                                               const std::string& header) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw format_error("bad CSV header, expected '" + header + "'");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            row.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double field_to_double(const std::string& f) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc{} || p != f.data() + f.size())
        throw format_error("bad CSV number: '" + f + "'");
    return v;
}

} // namespace

std::vector<std::complex<double>> parse_disk_csv(const std::string& text) {
    std::vector<std::complex<double>> out;
    for (const auto& row : csv_rows(text, "re,im")) {
        if (row.size() != 2) throw format_error("disk CSV rows need two fields");
        out.emplace_back(field_to_double(row[0]), field_to_double(row[1]));
    }
    return out;
}

std::vector<Vec3> parse_ball_csv(const std::string& text) {
    std::vector<Vec3> out;
    for (const auto& row : csv_rows(text, "x,y,z")) {
        if (row.size() != 3) throw format_error("ball CSV rows need three fields");
        out.push_back({field_to_double(row[0]), field_to_double(row[1]),
                       field_to_double(row[2])});
    }
    return out;
}

std::vector<long long> parse_index_csv(const std::string& text) {
    std::vector<long long> out;
    for (const auto& row : csv_rows(text, "index")) {
        if (row.size() != 1) throw format_error("index CSV rows need one field");
        out.push_back(static_cast<long long>(field_to_double(row[0])));
    }
    return out;
}

} // namespace gyrolab
