// wrideal: exact-arithmetic survey of well-rounded ideals in quadratic fields.
//
// Every subcommand prints machine-readable rows (csv, tsv or jsonl) with a
// fixed column order; integers and rationals are exact, decimals appear only
// in display columns. Exit status: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "wrideal/wrideal.hpp"

using namespace wrideal;

namespace {

enum class Format { csv, tsv, jsonl };

struct Cell {
    std::string key;
    std::string text;
    bool quote = false;  // string-valued in jsonl
};

Cell num(std::string key, i64 v) { return {std::move(key), std::to_string(v), false}; }
Cell flag(std::string key, bool v) { return {std::move(key), v ? "1" : "0", false}; }
Cell str(std::string key, std::string v) { return {std::move(key), std::move(v), true}; }

Cell rational(std::string key, i64 n, i64 d) {
    const i64 g = d == 0 ? 1 : std::gcd(n < 0 ? -n : n, d);
    return {std::move(key), std::to_string(n / g) + "/" + std::to_string(d / g), true};
}

Cell decimal(std::string key, double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << v;
    return {std::move(key), os.str(), false};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit(Format fmt, const std::vector<Cell>& cells) {
    std::string line;
    switch (fmt) {
        case Format::csv:
        case Format::tsv: {
            const char sep = fmt == Format::csv ? ',' : '\t';
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) line += sep;
                line += fmt == Format::csv ? csv_escape(cells[i].text) : cells[i].text;
            }
            break;
        }
        case Format::jsonl: {
            line = "{";
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) line += ",";
                line += "\"" + cells[i].key + "\":";
                if (cells[i].quote)
                    line += "\"" + cells[i].text + "\"";
                else
                    line += cells[i].text.empty() ? "null" : cells[i].text;
            }
            line += "}";
            break;
        }
    }
    std::cout << line << "\n";
}

std::pair<i64, i64> parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "tsv") return Format::tsv;
    if (s == "jsonl") return Format::jsonl;
    throw CLI::ValidationError("--format", "must be csv, tsv or jsonl");
}

void add_format_flag(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format: csv, tsv or jsonl")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "tsv", "jsonl"}));
}

void emit_pqclass(std::vector<Cell>& cells, const PqClass& c) {
    cells.push_back(num("p", c.p));
    cells.push_back(num("q", c.q));
    cells.push_back(num("r", c.r));
    cells.push_back(num("D", c.D));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-rounded ideal lattices in quadratic number fields"};
    app.require_subcommand(1);

    i64 arg_D = 0, arg_r = 1, arg_p = 0, arg_q = 0, arg_max = 0;
    i64 arg_field = 0, arg_a_max = 0, arg_height = 0;
    i64 arg_A = 0, arg_B = 0, arg_C = 0;
    std::string arg_sign = "real", arg_nu = "3";
    std::string fmt_solve, fmt_near, fmt_con, fmt_ideals, fmt_classify, fmt_reduce,
        fmt_density, fmt_scan, fmt_cn, fmt_prin, fmt_t1;

    auto* solve = app.add_subcommand("solve", "solve q^2 - p^2 = r^2 D; rows D,r,p,q");
    solve->add_option("--D", arg_D, "positive squarefree integer")->required();
    solve->add_option("--r", arg_r, "scaling factor")->default_val(1);
    add_format_flag(solve, fmt_solve);

    auto* near = app.add_subcommand("nearsquare", "nearsquare witness; rows D,nu,found,d");
    near->add_option("--D", arg_D)->required();
    near->add_option("--nu", arg_nu, "exact rational, e.g. 3 or 7/2")->default_val("3");
    add_format_flag(near, fmt_near);

    auto* con = app.add_subcommand("construct", "WR ideal from a solution; rows D,p,q,sign,a,b,g");
    con->add_option("--D", arg_D)->required();
    con->add_option("--p", arg_p)->required();
    con->add_option("--q", arg_q)->required();
    con->add_option("--sign", arg_sign)->check(CLI::IsMember({"real", "imaginary"}))->default_val("real");
    add_format_flag(con, fmt_con);

    auto* ideals = app.add_subcommand("ideals", "enumerate canonical ideal bases; rows m,a,b,g");
    ideals->add_option("--field", arg_field, "signed squarefree integer m")->required();
    ideals->add_option("--a-max", arg_a_max)->required();
    add_format_flag(ideals, fmt_ideals);

    auto* classify = app.add_subcommand("classify", "WR ideals by similarity class; rows m,a,b,g,p,q,r,D");
    classify->add_option("--field", arg_field)->required();
    classify->add_option("--a-max", arg_a_max)->required();
    add_format_flag(classify, fmt_classify);

    auto* reduce = app.add_subcommand("reduce", "Gauss-Lagrange reduction; rows A,B,C,rA,rB,rC,s1,s2,s3,s4");
    reduce->add_option("--A", arg_A)->required();
    reduce->add_option("--B", arg_B)->required();
    reduce->add_option("--C", arg_C)->required();
    add_format_flag(reduce, fmt_reduce);

    auto* density = app.add_subcommand("density", "squarefree / nearsquare / solvable densities");
    density->add_option("--max", arg_max)->required();
    add_format_flag(density, fmt_density);

    auto* scan = app.add_subcommand("scan", "per-field survey rows plus trailing summary");
    scan->add_option("--max", arg_max)->required();
    add_format_flag(scan, fmt_scan);

    auto* cn = app.add_subcommand("classnumber", "class number vs WR classes; rows D,delta,h,wr_classes");
    cn->add_option("--D", arg_D, "single D");
    cn->add_option("--max", arg_max, "scan squarefree D up to max");
    add_format_flag(cn, fmt_cn);

    auto* prin = app.add_subcommand("principal", "principal WR ideal search; rows m,x,y,a,b,g,p,q,r,D");
    prin->add_option("--field", arg_field)->required();
    prin->add_option("--height", arg_height)->required();
    add_format_flag(prin, fmt_prin);

    auto* t1 = app.add_subcommand("table1", "reproduce the published WR-ideal table");
    add_format_flag(t1, fmt_t1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            const Format f = parse_format(fmt_solve);
            for (const auto& [p, q] : solve_pq(arg_D, arg_r))
                emit(f, {num("D", arg_D), num("r", arg_r), num("p", p), num("q", q)});
        } else if (near->parsed()) {
            const Format f = parse_format(fmt_near);
            const auto [nn, nd] = parse_rational(arg_nu);
            const auto d = nearsquare_witness(arg_D, nn, nd);
            emit(f, {num("D", arg_D), rational("nu", nn, nd), flag("found", d.has_value()),
                     num("d", d.value_or(0))});
        } else if (con->parsed()) {
            const Format f = parse_format(fmt_con);
            const auto sign = arg_sign == "real" ? FieldSign::real : FieldSign::imaginary;
            const auto I = construct_wr_ideal(arg_D, arg_p, arg_q, sign);
            emit(f, {num("D", arg_D), num("p", arg_p), num("q", arg_q), str("sign", arg_sign),
                     num("a", I.a), num("b", I.b), num("g", I.g)});
        } else if (ideals->parsed()) {
            const Format f = parse_format(fmt_ideals);
            const auto field = make_field(arg_field);
            for (const auto& I : enumerate_ideals(field, arg_a_max))
                emit(f, {num("m", arg_field), num("a", I.a), num("b", I.b), num("g", I.g)});
        } else if (classify->parsed()) {
            const Format f = parse_format(fmt_classify);
            const auto rep = classify_wr_ideals(make_field(arg_field), arg_a_max);
            for (const auto& I : rep.representatives) {
                std::vector<Cell> cells{num("m", arg_field), num("a", I.a), num("b", I.b),
                                        num("g", I.g)};
                emit_pqclass(cells, similarity_class(gram_of_ideal(I)));
                emit(f, cells);
            }
        } else if (reduce->parsed()) {
            const Format f = parse_format(fmt_reduce);
            const auto [R, U] = reduce_form({arg_A, arg_B, arg_C});
            emit(f, {num("A", arg_A), num("B", arg_B), num("C", arg_C), num("rA", R.A),
                     num("rB", R.B), num("rC", R.C), num("s1", U.s1), num("s2", U.s2),
                     num("s3", U.s3), num("s4", U.s4)});
        } else if (density->parsed()) {
            const Format f = parse_format(fmt_density);
            const auto rep = density_report(arg_max);
            emit(f, {num("N", rep.N), num("squarefree", rep.squarefree_count),
                     num("nearsquare", rep.nearsquare_count), num("solvable", rep.solvable_count),
                     rational("ratio_nearsquare", rep.nearsquare_count, rep.squarefree_count),
                     rational("ratio_solvable", rep.solvable_count, rep.squarefree_count),
                     decimal("bound_display", rep.bound_constant)});
        } else if (scan->parsed()) {
            const Format f = parse_format(fmt_scan);
            const auto summary = scan_fields(arg_max, [&](const SurveyRecord& r) {
                emit(f, {str("row", "rec"), num("D", r.D), flag("nearsquare3", r.nearsquare3),
                         flag("solvable", r.solvable), num("f", r.f), num("f1", r.f1),
                         num("f2", r.f2), num("omega", r.omega), num("tau", r.tau),
                         flag("f1_bound_ok", r.f1_bound_ok)});
            });
            emit(f, {str("row", "summary"), num("N", summary.N),
                     num("squarefree", summary.squarefree_count),
                     num("nearsquare", summary.nearsquare_count),
                     num("solvable", summary.solvable_count),
                     rational("ratio_nearsquare", summary.nearsquare_count, summary.squarefree_count),
                     rational("ratio_solvable", summary.solvable_count, summary.squarefree_count)});
        } else if (cn->parsed()) {
            const Format f = parse_format(fmt_cn);
            auto emit_one = [&](i64 D) {
                const auto r = class_number_imag(D);
                emit(f, {num("D", r.D), num("delta", r.delta), num("h", r.h),
                         num("wr_classes", r.wr_classes)});
            };
            if (arg_max > 0) {
                const auto sf = squarefree_sieve(arg_max);
                for (i64 D = 1; D <= arg_max; ++D)
                    if (sf[D]) emit_one(D);
            } else if (arg_D > 0) {
                emit_one(arg_D);
            } else {
                throw std::invalid_argument("classnumber: pass --D or --max");
            }
        } else if (prin->parsed()) {
            const Format f = parse_format(fmt_prin);
            for (const auto& hit : principal_wr_search(make_field(arg_field), arg_height)) {
                std::vector<Cell> cells{num("m", arg_field), num("x", hit.x), num("y", hit.y),
                                        num("a", hit.ideal.a), num("b", hit.ideal.b),
                                        num("g", hit.ideal.g)};
                emit_pqclass(cells, hit.cls);
                emit(f, cells);
            }
        } else if (t1->parsed()) {
            const Format f = parse_format(fmt_t1);
            for (const auto& row : table1_report())
                emit(f, {num("D", row.D), num("a1", row.a1), num("b1", row.b1),
                         num("a2", row.a2), num("b2", row.b2), num("p", row.p),
                         num("q", row.q), num("r", row.r)});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
