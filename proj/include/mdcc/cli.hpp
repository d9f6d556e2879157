/*
   Copyright 2026 The mdcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MDCC_CLI_HPP
#define MDCC_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "complexes.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "observability.hpp"
#include "oracle.hpp"
#include "text.hpp"

namespace mdcc::cli {

using Json = nlohmann::ordered_json;

/// Rejected input document; line and column are 1-based positions in the document text.
class InputError : public std::runtime_error {
   public:
    InputError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_, column_;
};

/// Misuse of a command (wrong document kind, unsupported option combination).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Kind { code, complex };

struct InputDocument {
    FieldSpec field;
    int n;
    Kind kind;
    std::vector<PolyMatrix> matrices;  // one for a code, G_1..G_l for a complex

    Ring ring() const { return Ring::S(field, n); }
    CodePresentation code() const { return CodePresentation(matrices.front()); }
    PolyComplex complex() const { return validate_complex(matrices); }
};

namespace detail {

struct Position {
    std::size_t offset, line, column;
};

/**
 * Records where each value of a JSON document starts, keyed by JSON pointer.
 * Only run on documents nlohmann already accepted, so it skips validation.
 */
class JsonLocator {
   public:
    explicit JsonLocator(std::string_view text) : text_(text) {
        skip_ws();
        value("");
    }
    Position at(const std::string& pointer) const {
        auto it = where_.find(pointer);
        return it == where_.end() ? Position{0, 1, 1} : it->second;
    }

   private:
    Position here() const {
        Position p{pos_, 1, 1};
        for (std::size_t i = 0; i < pos_; ++i) {
            if (text_[i] == '\n') {
                ++p.line;
                p.column = 1;
            } else {
                ++p.column;
            }
        }
        return p;
    }
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r' || text_[pos_] == '\t'))
            ++pos_;
    }
    std::string string_token() {
        std::string s;
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\') s += text_[pos_++];
            s += text_[pos_++];
        }
        ++pos_;
        return s;
    }
    void value(const std::string& ptr) {
        where_[ptr] = here();
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (c == '{') {
            ++pos_;
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] != '}') {
                auto key = string_token();
                skip_ws();
                ++pos_;  // ':'
                skip_ws();
                value(ptr + "/" + key);
                skip_ws();
                if (text_[pos_] == ',') ++pos_;
                skip_ws();
            }
            ++pos_;
        } else if (c == '[') {
            ++pos_;
            skip_ws();
            for (std::size_t i = 0; pos_ < text_.size() && text_[pos_] != ']'; ++i) {
                value(ptr + "/" + std::to_string(i));
                skip_ws();
                if (text_[pos_] == ',') ++pos_;
                skip_ws();
            }
            ++pos_;
        } else if (c == '"') {
            string_token();
        } else {
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '}' &&
                   text_[pos_] != ' ' && text_[pos_] != '\n')
                ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, Position> where_;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

/**
 * Parses a document of the form
 *   {"p": 2, "n": 2, "kind": "code", "matrix": [["D1", "D2"]]}
 *   {"p": 2, "n": 2, "kind": "complex", "matrices": [[["D1", "D2"]], [["D2"], ["D1"]]]}
 * Matrices are lists of rows; entries are polynomial strings (or integers).
 */
inline InputDocument parse_input(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw InputError(std::string("malformed JSON: ") + e.what(), line, col);
    }
    detail::JsonLocator loc(text);
    auto fail = [&](const std::string& ptr, const std::string& msg, std::size_t extra = 0) -> InputError {
        auto p = loc.at(ptr);
        return InputError(msg, p.line, p.column + extra);
    };

    if (!doc.is_object()) throw fail("", "document must be a JSON object");
    for (const char* key : {"p", "n", "kind"})
        if (!doc.contains(key)) throw fail("", std::string("missing field \"") + key + "\"");
    if (!doc["p"].is_number_unsigned()) throw fail("/p", "p must be a positive integer");
    auto p = doc["p"].get<std::uint64_t>();
    if (p >= FieldSpec::kMaxModulus) throw fail("/p", "p must be below 2^31");
    if (!is_prime(p)) throw fail("/p", "p must be prime");
    if (!doc["n"].is_number_unsigned()) throw fail("/n", "n must be a positive integer");
    auto n = doc["n"].get<std::uint64_t>();
    if (n < 1 || n > static_cast<std::uint64_t>(kMaxVariables))
        throw fail("/n", "n must be between 1 and " + std::to_string(kMaxVariables));
    if (!doc["kind"].is_string()) throw fail("/kind", "kind must be \"code\" or \"complex\"");
    auto kind_name = doc["kind"].get<std::string>();
    if (kind_name != "code" && kind_name != "complex") throw fail("/kind", "kind must be \"code\" or \"complex\"");

    InputDocument out{FieldSpec(p), static_cast<int>(n), kind_name == "code" ? Kind::code : Kind::complex, {}};
    const Ring ring = out.ring();

    auto read_matrix = [&](const Json& m, const std::string& ptr) {
        if (!m.is_array() || m.empty()) throw fail(ptr, "a matrix must be a non-empty list of rows");
        std::size_t cols = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto rptr = ptr + "/" + std::to_string(i);
            if (!m[i].is_array() || m[i].empty()) throw fail(rptr, "a row must be a non-empty list of entries");
            if (i == 0) cols = m[i].size();
            if (m[i].size() != cols)
                throw fail(rptr, "dimension mismatch: row " + std::to_string(i) + " has " + std::to_string(m[i].size()) +
                                     " entries, expected " + std::to_string(cols));
        }
        PolyMatrix g(ring, m.size(), cols);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                auto eptr = ptr + "/" + std::to_string(i) + "/" + std::to_string(j);
                const auto& e = m[i][j];
                std::string s;
                if (e.is_string())
                    s = e.get<std::string>();
                else if (e.is_number_integer())
                    s = e.dump();
                else
                    throw fail(eptr, "entries must be polynomial strings");
                try {
                    g(i, j) = parse_poly(s, ring);
                } catch (const ParseError& pe) {
                    std::string msg = pe.what();
                    throw fail(eptr, msg.substr(0, msg.find(" (line")), e.is_string() ? pe.column() : 0);
                }
            }
        if (auto z = g.first_zero_column(); z >= 0)
            throw fail(ptr, "zero column " + std::to_string(z) + " (generator matrices have no zero columns)");
        return g;
    };

    if (out.kind == Kind::code) {
        if (!doc.contains("matrix")) throw fail("", "missing field \"matrix\"");
        out.matrices.push_back(read_matrix(doc["matrix"], "/matrix"));
    } else {
        if (!doc.contains("matrices") || !doc["matrices"].is_array() || doc["matrices"].empty())
            throw fail(doc.contains("matrices") ? "/matrices" : "", "field \"matrices\" must be a non-empty list");
        for (std::size_t k = 0; k < doc["matrices"].size(); ++k) {
            auto ptr = "/matrices/" + std::to_string(k);
            out.matrices.push_back(read_matrix(doc["matrices"][k], ptr));
            if (k > 0 && out.matrices[k - 1].cols() != out.matrices[k].rows())
                throw fail(ptr, "dimension mismatch: G_" + std::to_string(k) + " has " +
                                    std::to_string(out.matrices[k - 1].cols()) + " columns but G_" +
                                    std::to_string(k + 1) + " has " + std::to_string(out.matrices[k].rows()) + " rows");
        }
        try {
            validate_complex(out.matrices);
        } catch (const std::exception& e) {
            throw fail("/matrices", std::string("not a complex: ") + e.what());
        }
    }
    return out;
}

// ---- report helpers ----

inline Json matrix_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_poly(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json column_json(const ModElem& f) {
    Json col = Json::array();
    for (const auto& c : f.components()) col.push_back(format_poly(c));
    return col;
}

inline Json table_json(const std::vector<TwistFunction>& levels) {
    Json t = Json::array();
    for (const auto& l : levels) t.push_back(l.values());
    return t;
}

inline Json big_json(const BigInt& v) {
    if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return Json(static_cast<std::uint64_t>(v));
    return Json(v.str());
}

/// The complex as an input document of kind "complex".
inline Json complex_document(const PolyComplex& g) {
    Json doc;
    doc["p"] = g.ring().field().modulus();
    doc["n"] = g.ring().n();
    doc["kind"] = "complex";
    Json mats = Json::array();
    for (const auto& m : g.matrices()) mats.push_back(matrix_json(m));
    doc["matrices"] = std::move(mats);
    return doc;
}

struct Options {
    std::optional<int> hilbert_max;   // resolve
    int max_d = 0;                    // hilbert, oracle-verify
    bool oracle = false;              // hilbert
    std::string property;             // check: pd | reduced | minimal | resolution
    std::optional<std::size_t> prop3_bound;  // observable
    bool strict = false;              // check, observable, oracle-verify: exit 1 when the property is false
};

struct CommandResult {
    Json report;
    int exit_code = 0;
};

inline void require_kind(const InputDocument& doc, Kind kind, const std::string& cmd) {
    if (doc.kind != kind)
        throw UsageError(cmd + " requires a document of kind \"" + (kind == Kind::code ? "code" : "complex") + "\"");
}

inline CommandResult run_resolve(const InputDocument& doc, const Options& opt) {
    require_kind(doc, Kind::code, "resolve");
    auto rep = minimal_resolution(doc.code());
    auto inv = code_invariants(rep, opt.hilbert_max.value_or(-1));
    Json r;
    r["command"] = "resolve";
    r["p"] = doc.field.modulus();
    r["n"] = doc.n;
    r["q"] = rep.complex.q();
    r["length"] = rep.complex.length();
    Json p = Json::array();
    for (const auto& m : rep.complex.matrices()) p.push_back(m.cols());
    r["sizes"] = {{"q", rep.complex.q()}, {"p", p}};
    r["degree_table_raw"] = table_json(rep.degree_table.levels);
    r["forney_table"] = table_json(forney_table(rep).levels);
    r["memory"] = inv.memory;
    r["homological_dimension"] = inv.homological_dimension;
    r["rate"] = {{"numerators", inv.rate.numerators}, {"q", inv.rate.q}};
    r["checks"] = {{"resolution", rep.is_resolution},
                   {"reduced", rep.is_reduced},
                   {"pd", rep.is_pd},
                   {"minimal", rep.is_minimal}};
    if (opt.hilbert_max) {
        Json h = Json::array();
        for (const auto& [d, v] : inv.hilbert_values) h.push_back(big_json(v));
        r["hilbert"] = std::move(h);
    }
    r["complex"] = complex_document(rep.complex);
    return {std::move(r), 0};
}

inline CommandResult run_hilbert(const InputDocument& doc, const Options& opt) {
    require_kind(doc, Kind::code, "hilbert");
    if (opt.max_d < 0) throw UsageError("--max-d must be non-negative");
    auto rep = minimal_resolution(doc.code());
    Json r;
    r["command"] = "hilbert";
    r["max_d"] = opt.max_d;
    Json values = Json::array();
    std::vector<BigInt> formula;
    for (int d = 0; d <= opt.max_d; ++d) {
        formula.push_back(hilbert_formula(rep.degree_table, doc.n, d));
        values.push_back(big_json(formula.back()));
    }
    r["values"] = std::move(values);
    if (opt.oracle) {
        auto oracle = oracle::hilbert_oracle_range(doc.code(), opt.max_d);
        bool agree = true;
        for (int d = 0; d <= opt.max_d; ++d) agree = agree && formula[static_cast<std::size_t>(d)] == BigInt(oracle[static_cast<std::size_t>(d)]);
        r["oracle"] = oracle;
        r["agree"] = agree;
        return {std::move(r), agree || !opt.strict ? 0 : 1};
    }
    return {std::move(r), 0};
}

inline CommandResult run_check(const InputDocument& doc, const Options& opt) {
    require_kind(doc, Kind::complex, "check");
    auto g = doc.complex();
    Json r;
    r["command"] = "check";
    r["property"] = opt.property;
    bool holds = false;
    auto put_witness = [&](const std::optional<ExactnessWitness>& w, const char* kind) {
        if (!w) return;
        r["witness_kind"] = kind;
        r["witness_level"] = w->level;
        r["witness_column"] = column_json(w->element);
    };
    if (opt.property == "resolution") {
        auto w = resolution_defect(g);
        holds = !w;
        r["resolution"] = holds;
        put_witness(w, "kernel element outside the image");
    } else if (opt.property == "reduced") {
        auto w = reduced_defect(g);
        holds = !w;
        r["reduced"] = holds;
        put_witness(w, "leading-term kernel element outside the leading-term image");
    } else if (opt.property == "pd") {
        auto w = resolution_defect(g);
        if (w) {
            r["pd"] = false;
            put_witness(w, "kernel element outside the image");
        } else {
            auto wl = reduced_defect(g);
            holds = !wl;
            r["pd"] = holds;
            put_witness(wl, "leading-term kernel element outside the leading-term image");
        }
    } else if (opt.property == "minimal") {
        std::optional<ScalarEntry> w;
        try {
            w = minimality_defect(g);
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
        holds = !w;
        r["minimal"] = holds;
        if (w) {
            auto lead = leading_term_complex(g);
            r["witness"] = {{"level", w->level},
                            {"row", w->row},
                            {"col", w->col},
                            {"entry", format_poly(lead.G(w->level)(w->row, w->col))}};
        }
    } else {
        throw UsageError("unknown property \"" + opt.property + "\" (expected pd, reduced, minimal or resolution)");
    }
    return {std::move(r), holds || !opt.strict ? 0 : 1};
}

inline CommandResult run_observable(const InputDocument& doc, const Options& opt) {
    require_kind(doc, Kind::code, "observable");
    if (opt.prop3_bound && doc.n != 1) throw UsageError("--prop3-bound is supported only for n = 1");
    auto rep = is_observable(doc.code());
    Json r;
    r["command"] = "observable";
    r["observable"] = rep.observable;
    if (rep.parity_check) r["parity_check"] = matrix_json(*rep.parity_check);
    if (rep.witness) r["witness"] = column_json(*rep.witness);
    bool ok = rep.observable;
    if (opt.prop3_bound) {
        auto res = minimal_resolution(doc.code());
        bool exact = false;
        try {
            exact = prop3_spot_check(res.complex, *opt.prop3_bound);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        r["prop3"] = {{"bound", *opt.prop3_bound}, {"exact", exact}, {"agrees", exact == rep.observable}};
    }
    return {std::move(r), ok || !opt.strict ? 0 : 1};
}

inline CommandResult run_oracle_verify(const InputDocument& doc, const Options& opt) {
    require_kind(doc, Kind::code, "oracle-verify");
    if (opt.max_d < 0) throw UsageError("--max-d must be non-negative");
    auto code = doc.code();
    auto rep = minimal_resolution(code);
    auto oracle_values = oracle::hilbert_oracle_range(code, opt.max_d);
    Json r;
    r["command"] = "oracle-verify";
    r["max_d"] = opt.max_d;
    Json formula = Json::array(), exact = Json::array();
    bool agree = true, all_exact = true;
    for (int d = 0; d <= opt.max_d; ++d) {
        auto f = hilbert_formula(rep.degree_table, doc.n, d);
        formula.push_back(big_json(f));
        agree = agree && f == BigInt(oracle_values[static_cast<std::size_t>(d)]);
        bool e = oracle::truncated_exactness(rep.complex, d);
        exact.push_back(e);
        all_exact = all_exact && e;
    }
    int m = memory(rep);
    int horizon = std::max(opt.max_d, m + 1);
    bool recovers = oracle::memory_recovery_check(code, m, horizon);
    bool short_fails = !oracle::memory_recovery_check(code, m - 1, horizon);
    r["hilbert_formula"] = std::move(formula);
    r["hilbert_oracle"] = oracle_values;
    r["hilbert_agree"] = agree;
    r["truncated_exactness"] = std::move(exact);
    r["memory"] = m;
    r["memory_recovery"] = recovers;
    r["memory_minus_one_fails"] = short_fails;
    bool verified = agree && all_exact && recovers && short_fails && rep.is_pd && rep.is_minimal;
    r["verified"] = verified;
    return {std::move(r), verified || !opt.strict ? 0 : 1};
}

/// Dispatches one of resolve | hilbert | check | observable | oracle-verify.
inline CommandResult run_command(const std::string& cmd, const InputDocument& doc, const Options& opt) {
    if (cmd == "resolve") return run_resolve(doc, opt);
    if (cmd == "hilbert") return run_hilbert(doc, opt);
    if (cmd == "check") return run_check(doc, opt);
    if (cmd == "observable") return run_observable(doc, opt);
    if (cmd == "oracle-verify") return run_oracle_verify(doc, opt);
    throw UsageError("unknown command \"" + cmd + "\"");
}

}  // namespace mdcc::cli

#endif
