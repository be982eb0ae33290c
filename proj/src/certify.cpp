#include "sk/certify.hpp"

#include "sk/curve.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sk {
namespace {

using nlohmann::json;

// Largest table depth we are willing to materialize: 2^26 + 1 points is
// already ~1 GiB of bignum state, and the pairwise check is quadratic.
constexpr unsigned kMaxTableDepth = 26;

// Parse a decimal literal (sign, digits, optional fraction, optional
// exponent) exactly as a rational and round it to the nearest multiple of
// 2^-precision, ties to even. The result is therefore an exact dyadic.
Dyadic parse_decimal(const std::string& text, unsigned precision) {
    std::size_t pos = 0;
    const std::size_t len = text.size();
    bool negative = false;
    if (pos < len && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    mpz_class mantissa = 0;
    std::size_t digits = 0;
    long frac_digits = 0;
    while (pos < len && text[pos] >= '0' && text[pos] <= '9') {
        mantissa = mantissa * 10 + (text[pos] - '0');
        ++digits;
        ++pos;
    }
    if (pos < len && text[pos] == '.') {
        ++pos;
        while (pos < len && text[pos] >= '0' && text[pos] <= '9') {
            mantissa = mantissa * 10 + (text[pos] - '0');
            ++digits;
            ++frac_digits;
            ++pos;
        }
    }
    if (digits == 0) throw std::invalid_argument("decimal literal has no digits: '" + text + "'");

    long exp10 = 0;
    if (pos < len && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < len && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        std::size_t exp_digits = 0;
        while (pos < len && text[pos] >= '0' && text[pos] <= '9') {
            exp10 = exp10 * 10 + (text[pos] - '0');
            if (++exp_digits > 6) throw std::invalid_argument("decimal exponent out of range: '" + text + "'");
            ++pos;
        }
        if (exp_digits == 0) throw std::invalid_argument("decimal literal has a bare exponent: '" + text + "'");
        if (exp_negative) exp10 = -exp10;
    }
    if (pos != len) throw std::invalid_argument("trailing characters in decimal literal: '" + text + "'");

    if (negative) mantissa = -mantissa;

    // value = mantissa * 10^(exp10 - frac_digits)
    long scale = exp10 - frac_digits;
    if (scale >= 0) {
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale));
        return Dyadic(mantissa * pow10, 0);  // an exact integer
    }

    // value = mantissa / 10^u with u > 0; round mantissa * 2^p / 10^u to the
    // nearest integer n (ties to even) and return n / 2^p.
    const auto u = static_cast<unsigned long>(-scale);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, u);
    mpz_class num = mantissa << precision;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class twice_r = r * 2;
    const int cmp = ::cmp(twice_r, den);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return Dyadic(std::move(q), precision);
}

Point parse_point(const json& element, std::size_t index, TableEncoding encoding, unsigned precision) {
    if (!element.is_array() || element.size() != 2 || !element[0].is_string() || !element[1].is_string()) {
        throw std::invalid_argument("point " + std::to_string(index) +
                                    " is not a pair of coordinate strings");
    }
    try {
        const auto& xs = element[0].get_ref<const std::string&>();
        const auto& ys = element[1].get_ref<const std::string&>();
        if (encoding == TableEncoding::Dyadic) {
            return {Dyadic::parse(xs), Dyadic::parse(ys)};
        }
        return {parse_decimal(xs, precision), parse_decimal(ys, precision)};
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("point " + std::to_string(index) + ": " + e.what());
    }
}

std::string pair_label(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

const char* check_name(CheckId id) {
    switch (id) {
        case CheckId::C1: return "C1 anchor triangle";
        case CheckId::C2: return "C2 pairwise growth bound";
        case CheckId::C3: return "C3 midpoint recursion";
        case CheckId::C4: return "C4 pointwise isometry match";
    }
    return "unknown check";
}

Dyadic default_tolerance(TableEncoding encoding) {
    if (encoding == TableEncoding::Decimal) return Dyadic(1, 40);
    return Dyadic(0);
}

CandidateTable load_table(std::istream& in) {
    json doc = json::parse(in);
    if (!doc.is_object()) throw std::invalid_argument("table document must be a JSON object");

    CandidateTable table;
    if (!doc.contains("depth") || !doc["depth"].is_number_unsigned()) {
        throw std::invalid_argument("table needs an unsigned integer 'depth' field");
    }
    const auto depth = doc["depth"].get<std::uint64_t>();
    if (depth == 0) throw std::invalid_argument("table depth must be at least 1");
    if (depth > kMaxTableDepth) {
        throw std::invalid_argument("table depth " + std::to_string(depth) + " exceeds the supported maximum " +
                                    std::to_string(kMaxTableDepth));
    }
    table.depth = static_cast<unsigned>(depth);

    if (!doc.contains("encoding") || !doc["encoding"].is_string()) {
        throw std::invalid_argument("table needs an 'encoding' field of \"dyadic\" or \"decimal\"");
    }
    const auto& encoding = doc["encoding"].get_ref<const std::string&>();
    if (encoding == "dyadic") {
        table.encoding = TableEncoding::Dyadic;
    } else if (encoding == "decimal") {
        table.encoding = TableEncoding::Decimal;
    } else {
        throw std::invalid_argument("unknown table encoding '" + encoding + "'");
    }

    if (doc.contains("precision")) {
        if (!doc["precision"].is_number_unsigned()) {
            throw std::invalid_argument("table 'precision' must be an unsigned bit count");
        }
        const auto precision = doc["precision"].get<std::uint64_t>();
        if (precision == 0 || precision > 4096) {
            throw std::invalid_argument("table precision must be between 1 and 4096 bits");
        }
        table.precision = static_cast<unsigned>(precision);
    }

    if (!doc.contains("points") || !doc["points"].is_array()) {
        throw std::invalid_argument("table needs a 'points' array");
    }
    const auto& points = doc["points"];
    const std::size_t expected = (std::size_t{1} << table.depth) + 1;
    if (points.size() != expected) {
        throw std::invalid_argument("table at depth " + std::to_string(table.depth) + " must list " +
                                    std::to_string(expected) + " points, found " + std::to_string(points.size()));
    }
    table.points.reserve(expected);
    for (std::size_t i = 0; i < points.size(); ++i) {
        table.points.push_back(parse_point(points[i], i, table.encoding, table.precision));
    }
    return table;
}

CandidateTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
    return load_table(in);
}

std::string table_to_json_text(const CandidateTable& table) {
    // The in-memory representation is always exact dyadics, so serialize as
    // such regardless of how the table was originally encoded.
    json doc;
    doc["depth"] = table.depth;
    doc["encoding"] = "dyadic";
    json points = json::array();
    for (const auto& p : table.points) {
        points.push_back(json::array({p.x.str(), p.y.str()}));
    }
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

CandidateTable export_reference_table(unsigned depth) {
    if (depth == 0 || depth > kMaxTableDepth) {
        throw std::domain_error("reference table depth must be between 1 and " + std::to_string(kMaxTableDepth));
    }
    CandidateTable table;
    table.depth = depth;
    table.encoding = TableEncoding::Dyadic;
    const std::size_t count = (std::size_t{1} << depth) + 1;
    table.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        table.points.push_back(evaluate(Dyadic(mpz_class(static_cast<unsigned long>(i)), depth)));
    }
    return table;
}

namespace {

struct CheckState {
    const CandidateTable& table;
    const Dyadic& tol;
    Verdict& verdict;

    bool fail(CheckId id, std::string violation) const {
        verdict.pass = false;
        verdict.failed_check = id;
        verdict.first_violation = std::move(violation);
        verdict.statement = std::string("certification failed at ") + check_name(id) + ": " +
                            verdict.first_violation;
        return false;
    }

    bool within(const Dyadic& value, const Dyadic& target) const {
        Dyadic diff = value - target;
        if (diff.sign() < 0) diff = -diff;
        return !(diff > tol);
    }
};

bool check_anchor_triangle(const CheckState& st) {
    const auto& pts = st.table.points;
    const std::size_t n = pts.size() - 1;
    const Point& p0 = pts[0];
    const Point& mid = pts[n / 2];
    const Point& pn = pts[n];

    const Dyadic span = squared_distance(p0, pn);
    if (!st.within(span, Dyadic(4))) {
        return st.fail(CheckId::C1, "|p[" + std::to_string(n) + "] - p[0]|^2 = " + span.str() +
                                        ", expected 4 within " + st.tol.str());
    }
    const Dyadic leg_a = squared_distance(p0, mid);
    if (!st.within(leg_a, Dyadic(2))) {
        return st.fail(CheckId::C1, "|p[" + std::to_string(n / 2) + "] - p[0]|^2 = " + leg_a.str() +
                                        ", expected 2 within " + st.tol.str());
    }
    const Dyadic leg_b = squared_distance(mid, pn);
    if (!st.within(leg_b, Dyadic(2))) {
        return st.fail(CheckId::C1, "|p[" + std::to_string(n) + "] - p[" + std::to_string(n / 2) + "]|^2 = " +
                                        leg_b.str() + ", expected 2 within " + st.tol.str());
    }

    const Dyadic orient = cross(p0, mid, pn);
    if (orient.is_zero()) {
        return st.fail(CheckId::C1, "anchor samples are collinear");
    }
    const bool ccw = orient.sign() > 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Dyadic c1 = cross(p0, mid, pts[i]);
        const Dyadic c2 = cross(mid, pn, pts[i]);
        const Dyadic c3 = cross(pn, p0, pts[i]);
        bool inside;
        if (ccw) {
            inside = (c1 + st.tol).sign() >= 0 && (c2 + st.tol).sign() >= 0 && (c3 + st.tol).sign() >= 0;
        } else {
            inside = (c1 - st.tol).sign() <= 0 && (c2 - st.tol).sign() <= 0 && (c3 - st.tol).sign() <= 0;
        }
        if (!inside) {
            return st.fail(CheckId::C1, "sample " + std::to_string(i) + " = (" + pts[i].x.str() + ", " +
                                            pts[i].y.str() + ") lies outside the anchor triangle");
        }
    }
    return true;
}

bool check_growth_bound(const CheckState& st) {
    const auto& pts = st.table.points;
    const unsigned depth = st.table.depth;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Dyadic d2 = squared_distance(pts[i], pts[j]);
            const Dyadic bound = Dyadic(mpz_class(4) * static_cast<unsigned long>(j - i), depth) + st.tol;
            if (d2 > bound) {
                return st.fail(CheckId::C2, "pair " + pair_label(i, j) + ": |p[j] - p[i]|^2 = " + d2.str() +
                                                " exceeds 4 (j - i) / 2^depth + tol = " + bound.str());
            }
        }
    }
    return true;
}

// In-order walk of the subdivision tree. A node covering sample indices
// [lo, hi] with oriented triple (entry, right, exit) predicts that the
// sample at the midpoint index equals its right-angle vertex; its children
// share the altitude foot midpoint(entry, exit) as their right-angle vertex.
bool check_midpoints(const CheckState& st, const Point& entry, const Point& right, const Point& exit,
                     std::size_t lo, std::size_t hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Point foot = midpoint(entry, exit);
    if (hi - lo >= 4 && !check_midpoints(st, entry, foot, right, lo, mid)) return false;
    const Dyadic d2 = squared_distance(st.table.points[mid], right);
    if (d2 > st.tol) {
        return st.fail(CheckId::C3, "sample " + std::to_string(mid) + " = (" + st.table.points[mid].x.str() +
                                        ", " + st.table.points[mid].y.str() +
                                        ") should be the subdivision vertex (" + right.x.str() + ", " +
                                        right.y.str() + "); squared offset " + d2.str());
    }
    if (hi - lo >= 4 && !check_midpoints(st, right, foot, exit, mid, hi)) return false;
    return true;
}

bool check_pointwise(const CheckState& st) {
    const auto& pts = st.table.points;
    const std::size_t n = pts.size() - 1;
    Isometry iso;
    try {
        iso = detect_isometry(pts[0], pts[n / 2], pts[n], st.tol);
    } catch (const std::domain_error& e) {
        return st.fail(CheckId::C4, e.what());
    }
    st.verdict.isometry = iso;

    const QuadDyadic tol_sq(st.tol * st.tol);
    for (std::size_t i = 0; i <= n; ++i) {
        const QuadPoint mapped = iso.apply(pts[i]);
        const Point ref = evaluate(Dyadic(mpz_class(static_cast<unsigned long>(i)), st.table.depth));
        const QuadPoint target{QuadDyadic(ref.x), QuadDyadic(ref.y)};
        const QuadDyadic d2 = squared_distance(mapped, target);
        if ((d2 - tol_sq).sign() > 0) {
            return st.fail(CheckId::C4, "sample " + std::to_string(i) + " maps to " + mapped.x.str() + ", " +
                                            mapped.y.str() + " but the curve passes through (" + ref.x.str() +
                                            ", " + ref.y.str() + "); squared offset " + d2.str());
        }
    }
    return true;
}

}  // namespace

Verdict certify(const CandidateTable& table, const Dyadic& tol) {
    if (table.depth == 0 || table.depth > kMaxTableDepth) {
        throw std::domain_error("candidate table depth must be between 1 and " + std::to_string(kMaxTableDepth));
    }
    const std::size_t expected = (std::size_t{1} << table.depth) + 1;
    if (table.points.size() != expected) {
        throw std::domain_error("candidate table at depth " + std::to_string(table.depth) + " must hold " +
                                std::to_string(expected) + " points, found " +
                                std::to_string(table.points.size()));
    }
    if (tol.sign() < 0) throw std::domain_error("tolerance must be nonnegative");

    Verdict verdict;
    CheckState st{table, tol, verdict};
    const std::size_t n = expected - 1;

    if (!check_anchor_triangle(st)) return verdict;
    if (!check_growth_bound(st)) return verdict;
    if (!check_midpoints(st, table.points[0], table.points[n / 2], table.points[n], 0, n)) return verdict;
    if (!check_pointwise(st)) return verdict;

    verdict.pass = true;
    verdict.statement =
        "the table is consistent with the reference traversal at depth " + std::to_string(table.depth) +
        " up to the reported plane isometry: anchor geometry, the pairwise squared-distance growth bound, "
        "the midpoint subdivision recursion, and pointwise agreement all hold within tolerance " + tol.str() +
        ". Behaviour between consecutive samples is attested only through the growth bound at sampled pairs.";
    return verdict;
}

}  // namespace sk
