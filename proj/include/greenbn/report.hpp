#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenbn/green.hpp"
#include "greenbn/springer.hpp"

namespace greenbn {

// A residual-subspace orbit with everything the reports print about it.
struct ResidualRow {
    SubspaceType type;
    CentralCharacter center;
    std::vector<int> twice_jumps;  // of the B part
    int confluence_size = 0;

    friend bool operator==(const ResidualRow& a, const ResidualRow& b) {
        return a.type == b.type && a.center == b.center && a.twice_jumps == b.twice_jumps &&
               a.confluence_size == b.confluence_size;
    }
};

struct ResidualReport {
    int n = 0;
    MParam m;
    std::vector<ResidualRow> rows;

    friend bool operator==(const ResidualReport& a, const ResidualReport& b) {
        return a.n == b.n && a.m == b.m && a.rows == b.rows;
    }
};

struct SpringerRow {
    SubspaceType type;
    std::vector<BiPartition> sigma;
    UnipotentLabel label;
    bool roundtrip_ok = false;

    friend bool operator==(const SpringerRow& a, const SpringerRow& b) {
        return a.type == b.type && a.sigma == b.sigma && a.label == b.label &&
               a.roundtrip_ok == b.roundtrip_ok;
    }
};

struct SpringerReport {
    int n = 0;
    MParam m;
    std::vector<SpringerRow> rows;

    friend bool operator==(const SpringerReport& a, const SpringerReport& b) {
        return a.n == b.n && a.m == b.m && a.rows == b.rows;
    }
};

struct UnipotentRow {
    UnipotentLabel label;
    std::vector<BiPartition> phi_class;
    SubspaceType type;

    friend bool operator==(const UnipotentRow& a, const UnipotentRow& b) {
        return a.label == b.label && a.phi_class == b.phi_class && a.type == b.type;
    }
};

struct UnipotentReport {
    int n = 0;
    MParam m;
    std::vector<UnipotentRow> rows;

    friend bool operator==(const UnipotentReport& a, const UnipotentReport& b) {
        return a.n == b.n && a.m == b.m && a.rows == b.rows;
    }
};

struct SymbolRow {
    BiPartition item;
    AValue a;
    std::string symbol;
    int block = 0;

    friend bool operator==(const SymbolRow& a, const SymbolRow& b) {
        return a.item == b.item && a.a == b.a && a.symbol == b.symbol && a.block == b.block;
    }
};

struct SymbolsReport {
    int n = 0;
    MParam m;
    std::vector<SymbolRow> rows;

    friend bool operator==(const SymbolsReport& a, const SymbolsReport& b) {
        return a.n == b.n && a.m == b.m && a.rows == b.rows;
    }
};

struct GreenReport {
    int n = 0;
    MParam m;
    uint64_t seed = 0;
    bool twist = false;
    std::vector<BiPartition> basis;
    std::vector<std::vector<int>> blocks;
    std::vector<AValue> a_values;
    std::vector<std::vector<std::vector<std::string>>> p;       // coeff lists, row-major
    std::vector<std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>>
        lambda;  // (num, den) coeff lists
    std::vector<GradedTable> tables;          // one per basis column
    std::vector<CentralCharacter> predicted;  // per column

    friend bool operator==(const GreenReport& a, const GreenReport& b);
};

ResidualReport build_residual_report(int n, MParam m);
SpringerReport build_springer_report(int n, MParam m);
UnipotentReport build_unipotent_report(int n, MParam m);
SymbolsReport build_symbols_report(int n, MParam m);
GreenReport build_green_report(const GreenSolution& sol, MParam m, uint64_t seed, bool twist);

// JSON text, stable field order; parse inverts emit exactly.
std::string emit_json(const ResidualReport& r);
std::string emit_json(const SpringerReport& r);
std::string emit_json(const UnipotentReport& r);
std::string emit_json(const SymbolsReport& r);
std::string emit_json(const GreenReport& r);
ResidualReport parse_residual_report(const std::string& text);
SpringerReport parse_springer_report(const std::string& text);
UnipotentReport parse_unipotent_report(const std::string& text);
SymbolsReport parse_symbols_report(const std::string& text);
GreenReport parse_green_report(const std::string& text);

// Plain-text renderings used by the command line.
std::string render_text(const ResidualReport& r);
std::string render_text(const SpringerReport& r);
std::string render_text(const UnipotentReport& r);
std::string render_text(const SymbolsReport& r);
std::string render_text(const GreenReport& r);

// Character table and omega matrix, cached on disk keyed by the rank. A
// missing, stale or corrupt cache file is recomputed and rewritten; an
// empty cache_dir disables caching.
std::pair<CharTable, MatrixRF> table_and_omega(int n, const std::string& cache_dir);

}  // namespace greenbn
