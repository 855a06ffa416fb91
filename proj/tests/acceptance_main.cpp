#include <cstdlib>
#include <iostream>
#include <string>

#include "ssp/acceptance.hpp"
#include "ssp/generators.hpp"

// Runs every acceptance criterion and prints one verdict line each. The last
// criterion drives the installed command-line binary end to end; pass its
// path as --cli (omitting it skips nothing: the criterion then fails).
int main(int argc, char** argv) {
    std::string cli;
    std::uint64_t seed = ssp::kDefaultSeed;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            cli = argv[++i];
        } else if (arg == "--seed" && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::cerr << "usage: ssp_acceptance --cli <path-to-ssp-cli> [--seed n]\n";
            return 2;
        }
    }

    bool all = ssp::run_acceptance(seed, [](const std::string& line) {
        std::cout << line << "\n";
        std::cout.flush();
    });

    bool cli_ok = false;
    if (cli.empty()) {
        std::cout << "criterion 9: FAIL command-line selftest (no --cli path given)\n";
    } else {
        std::string command = "\"" + cli + "\" selftest > /dev/null 2>&1";
        int status = std::system(command.c_str());
        cli_ok = status == 0;
        std::cout << "criterion 9: " << (cli_ok ? "PASS" : "FAIL")
                  << " command-line selftest\n";
    }

    if (all && cli_ok) {
        std::cout << "acceptance: PASS\n";
        return 0;
    }
    std::cout << "acceptance: FAIL\n";
    return 1;
}
