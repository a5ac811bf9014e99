#ifndef ZETACRIT_ZERO_TABLE_HPP
#define ZETACRIT_ZERO_TABLE_HPP

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "zetacrit/errors.hpp"

namespace zetacrit {

enum class ZeroSource { computed, imported, hypothetical };

struct ZeroOrdinate {
    double t = 0.0;          // ordinate, > 0
    int multiplicity = 1;
    ZeroSource source = ZeroSource::computed;
    double sigma = 0.5;      // 1/2 for computed/imported entries
};

// All zeros with ordinate <= height, sorted by strictly increasing t.
struct ZeroTable {
    std::vector<ZeroOrdinate> ordinates;
    double height = 0.0;

    std::size_t count_below(double x) const {
        auto it = std::upper_bound(
            ordinates.begin(), ordinates.end(), x,
            [](double v, const ZeroOrdinate& z) { return v < z.t; });
        return static_cast<std::size_t>(it - ordinates.begin());
    }
};

namespace detail {

inline double parse_ordinate(const std::string& line, long line_no) {
    double v = 0.0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    while (ptr < last && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
    if (ec != std::errc{} || ptr != last)
        throw ParseError("malformed ordinate at line " +
                         std::to_string(line_no));
    return v;
}

} // namespace detail

// Parses the one-ordinate-per-line ASCII format ("#" lines are comments;
// an optional "# height=T" header pins the covered height).  Monotonicity
// is enforced here; count validation against the counting function is the
// caller's job (zero_locator.hpp), since it needs arg tracking.
inline ZeroTable read_zero_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open zero table file: " + path);
    ZeroTable table;
    double declared_height = -1.0;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("height=");
            if (pos != std::string::npos)
                declared_height =
                    detail::parse_ordinate(line.substr(pos + 7), line_no);
            continue;
        }
        const double t = detail::parse_ordinate(line, line_no);
        if (!(t > 0.0))
            throw ParseError("nonpositive ordinate at line " +
                             std::to_string(line_no));
        if (!table.ordinates.empty() && t <= table.ordinates.back().t)
            throw NotMonotone("ordinates must be strictly increasing (line " +
                              std::to_string(line_no) + ")");
        table.ordinates.push_back({t, 1, ZeroSource::imported, 0.5});
    }
    if (declared_height >= 0.0)
        table.height = declared_height;
    else
        table.height =
            table.ordinates.empty() ? 0.0 : table.ordinates.back().t;
    return table;
}

// Cache format: "# height=T" header then one ordinate per line, printed
// with enough digits for a bit-exact round trip.
inline void save_zero_table(const ZeroTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write zero table file: " + path);
    char buf[48];
    std::snprintf(buf, sizeof buf, "# height=%.17g\n", table.height);
    out << buf;
    for (const auto& z : table.ordinates) {
        std::snprintf(buf, sizeof buf, "%.17g\n", z.t);
        out << buf;
    }
}

} // namespace zetacrit

#endif
