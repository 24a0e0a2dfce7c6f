#include <CLI11.hpp>

#include "sornum/demos.hpp"

#include <cstdio>
#include <string>

using namespace sornum;

namespace {

std::string fmt_endpoint(const RStar& x) {
    return x.is_inf() ? "inf" : decimal_string(x.value());
}

int cmd_gen(unsigned bits, unsigned sig, const std::string& out) {
    TableSet t = generate_machine(bits, sig);
    save_tables(t, out);
    const size_t n = t.n_unums;
    size_t entries = 2 * (n * (n + 1) / 2) + n;
    size_t payload = entries * sizeof(TableEntry) + 3 * n * sizeof(uint16_t);
    std::printf("wrote %s\n", out.c_str());
    std::printf("n_b = %u, n_s = %u, |P| = %zu, |U| = %zu\n", bits, sig, t.lattice.size(), n);
    std::printf("nominal table size: %llu bits (%llu bytes)\n", table_size_bits(bits),
                table_size_bits(bits) / 8);
    std::printf("stored payload: %zu bytes plus header and checksum\n", payload);
    return 0;
}

int cmd_info(const std::string& path) {
    TableSet t = load_tables(path);
    Runtime rt = Runtime::load(path);
    const size_t n = t.n_unums;
    const Rational& pmax = rt.env().lattice().points.back();
    Rational inv(pmax.get_den(), pmax.get_num());
    inv.canonicalize();
    std::printf("n_b          %u\n", t.n_b);
    std::printf("n_s          %u\n", t.n_s);
    std::printf("|P|          %zu\n", t.lattice.size());
    std::printf("|U|          %zu\n", n);
    std::printf("max(P)       %s\n", sci_string(pmax, 3).c_str());
    std::printf("1/max(P)     %s\n", sci_string(inv, 3).c_str());
    std::printf("add table    %zu entries, %zu bytes\n", t.add_table.size(),
                t.add_table.size() * sizeof(TableEntry));
    std::printf("mul table    %zu entries, %zu bytes\n", t.mul_table.size(),
                t.mul_table.size() * sizeof(TableEntry));
    std::printf("log table    %zu entries, %zu bytes\n", t.log_table.size(),
                t.log_table.size() * sizeof(TableEntry));
    std::printf("unary maps   %zu bytes\n", 3 * n * sizeof(uint16_t));
    return 0;
}

int cmd_demo(const std::string& name, const std::string& mode, const std::string& table,
             bool csv) {
    if (mode == "float") {
        std::vector<FloatRow> rows;
        if (name == "spike")
            rows = spike_float();
        else if (name == "devil")
            rows = devil_float();
        else if (name == "bank")
            rows = bank_float();
        else if (name == "euler")
            throw CLI::ValidationError("demo", "euler has no float variant; use --mode unum");
        if (csv) std::printf("n,value\n");
        for (const auto& r : rows)
            std::printf(csv ? "%d,%.17g\n" : "%3d  %.17g\n", r.n, r.value);
        return 0;
    }
    if (table.empty())
        throw CLI::ValidationError("demo", "--table is required for unum demos");
    Runtime rt = Runtime::load(table);
    std::vector<SornRow> rows;
    if (name == "spike")
        rows = spike_unum(rt);
    else if (name == "devil")
        rows = devil_unum(rt);
    else if (name == "bank")
        rows = bank_unum(rt);
    else
        rows = euler_unum(rt, 20);
    if (csv) {
        std::printf("n,lo,lo_open,hi,hi_open,is_full,is_empty\n");
        for (const auto& r : rows) {
            Hull h = rt.hull(r.value);
            if (h.is_empty || h.is_full) {
                std::printf("%d,,,,,%d,%d\n", r.n, h.is_full ? 1 : 0, h.is_empty ? 1 : 0);
            } else {
                std::printf("%d,%s,%d,%s,%d,0,0\n", r.n, fmt_endpoint(h.lo).c_str(),
                            h.lo_open ? 1 : 0, fmt_endpoint(h.hi).c_str(), h.hi_open ? 1 : 0);
            }
        }
    } else {
        for (const auto& r : rows) std::printf("%3d  %s\n", r.n, rt.uout(r.value).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"table-driven Unum/SORN arithmetic toolkit"};
    app.require_subcommand(1);

    unsigned bits = 8, sig = 1;
    std::string out = "tables.sorn";
    CLI::App* gen = app.add_subcommand("gen", "generate and store a machine table set");
    gen->add_option("--bits", bits, "total Unum bits n_b (3..16)")->required();
    gen->add_option("--sig-digits", sig, "significant decimal digits n_s")->required();
    gen->add_option("--out", out, "output path");

    std::string table;
    CLI::App* info = app.add_subcommand("info", "describe a stored table set");
    info->add_option("--table", table, "table file")->required();

    std::string demo_name, mode = "float", demo_table;
    bool csv = false;
    CLI::App* demo = app.add_subcommand("demo", "run a reproduction experiment");
    demo->add_option("name", demo_name, "spike, devil, bank or euler")
        ->required()
        ->check(CLI::IsMember({"spike", "devil", "bank", "euler"}));
    demo->add_option("--mode", mode, "float or unum")
        ->check(CLI::IsMember({"float", "unum"}));
    demo->add_option("--table", demo_table, "table file (unum mode)");
    demo->add_flag("--csv", csv, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(bits, sig, out);
        if (info->parsed()) return cmd_info(table);
        return cmd_demo(demo_name, mode, demo_table, csv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
