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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mdcc/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mdcc::cli::UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int report_error(const std::string& msg) {
    std::cerr << mdcc::cli::Json{{"error", msg}}.dump() << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mdcc: minimal reduced resolutions and invariants of multidimensional convolutional codes"};
    app.require_subcommand(1);

    mdcc::cli::Options opt;
    std::string file, out;
    int hilbert_max = -1;
    std::size_t prop3_bound = 0;

    auto* resolve = app.add_subcommand("resolve", "minimal reduced resolution, Forney table and invariants");
    resolve->add_option("file", file, "code document")->required();
    resolve->add_option("--hilbert-max", hilbert_max, "also report HF(C, d) for 0 <= d <= D");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function from the Forney table");
    hilbert->add_option("file", file, "code document")->required();
    hilbert->add_option("--max-d", opt.max_d, "largest degree")->required();
    hilbert->add_flag("--oracle", opt.oracle, "cross-check against truncated linear algebra");

    auto* check = app.add_subcommand("check", "decide a property of a polynomial complex");
    check->add_option("property", opt.property, "pd | reduced | minimal | resolution")
        ->required()
        ->check(CLI::IsMember({"pd", "reduced", "minimal", "resolution"}));
    check->add_option("file", file, "complex document")->required();

    auto* observable = app.add_subcommand("observable", "observability and parity-check matrix");
    observable->add_option("file", file, "code document")->required();
    auto* bound_opt = observable->add_option("--prop3-bound", prop3_bound, "univariate exactness check over F[D]/(λ)");

    auto* verify = app.add_subcommand("oracle-verify", "verify a computed resolution by brute force");
    verify->add_option("file", file, "code document")->required();
    verify->add_option("--max-d", opt.max_d, "largest degree")->required();

    for (auto* sub : {resolve, hilbert, check, observable, verify})
        sub->add_option("--out", out, "write the report to this file");
    for (auto* sub : {hilbert, check, observable, verify})
        sub->add_flag("--strict", opt.strict, "exit with status 1 when the property is false");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (hilbert_max >= 0) opt.hilbert_max = hilbert_max;
    if (bound_opt->count() > 0) opt.prop3_bound = prop3_bound;
    const std::string cmd = app.get_subcommands().front()->get_name();

    mdcc::cli::CommandResult result;
    try {
        auto doc = mdcc::cli::parse_input(read_file(file));
        result = mdcc::cli::run_command(cmd, doc, opt);
    } catch (const mdcc::cli::InputError& e) {
        return report_error(e.what());
    } catch (const mdcc::cli::UsageError& e) {
        return report_error(e.what());
    } catch (const std::exception& e) {
        return report_error(std::string("internal error: ") + e.what());
    }

    const std::string text = result.report.dump(2) + "\n";
    if (!out.empty()) {
        std::ofstream os(out, std::ios::binary);
        if (!os) return report_error("cannot write " + out);
        os << text;
    } else {
        std::cout << text;
    }
    return result.exit_code;
}
