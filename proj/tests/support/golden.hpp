// Runs the golden CLI cases listed in tests/golden/MANIFEST in process.
#ifndef HOOKTAB_TESTS_GOLDEN_HPP
#define HOOKTAB_TESTS_GOLDEN_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hooktab/cli.hpp"

namespace golden {

struct Case {
    std::string name;
    int exit_code = 0;
    std::vector<std::string> args;
};

struct Outcome {
    Case c;
    bool passed = false;
    std::string detail;
};

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::string slurp(const std::string& path, bool* found = nullptr) {
    std::ifstream f(path, std::ios::binary);
    if (found) *found = static_cast<bool>(f);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline std::vector<Case> load_manifest(const std::string& dir) {
    std::vector<Case> out;
    std::istringstream lines(slurp(dir + "/MANIFEST"));
    std::string line;
    while (std::getline(lines, line)) {
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        const auto p1 = line.find('|');
        const auto p2 = line.find('|', p1 + 1);
        Case c;
        c.name = trim(line.substr(0, p1));
        c.exit_code = std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1)));
        std::istringstream words(line.substr(p2 + 1));
        for (std::string w; words >> w;) c.args.push_back(w);
        out.push_back(c);
    }
    return out;
}

inline Outcome run_case(const std::string& dir, const Case& c) {
    std::istringstream in(slurp(dir + "/" + c.name + ".in"));
    std::ostringstream out, err;
    const int code = hooktab::cli::run(c.args, in, out, err);
    bool found = false;
    const std::string expected = slurp(dir + "/" + c.name + ".out", &found);
    Outcome o{c, true, ""};
    if (!found) {
        o.passed = false;
        o.detail = "missing " + c.name + ".out";
    } else if (code != c.exit_code) {
        o.passed = false;
        o.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code) + "; " + err.str();
    } else if (out.str() != expected) {
        o.passed = false;
        o.detail = "output differs:\n" + out.str();
    }
    return o;
}

inline std::vector<Outcome> run_all(const std::string& dir) {
    std::vector<Outcome> out;
    for (const auto& c : load_manifest(dir)) out.push_back(run_case(dir, c));
    return out;
}

}  // namespace golden

#endif  // HOOKTAB_TESTS_GOLDEN_HPP
