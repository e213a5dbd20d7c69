// report.hpp -- machine-readable experiment reports.
//
// One JSON object per check, emitted as a single line. Keys are sorted by
// the JSON library, values derive only from inputs and the seed, so report
// streams are byte-identical across runs. Wall-clock timing goes to stderr,
// never into the report stream.

#pragma once

#include <json.hpp>

#include <iostream>
#include <string>

namespace coarse {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    Verdict verdict = Verdict::Inconclusive;
    nlohmann::json evidence = nlohmann::json::object();

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["result"] = to_string(verdict);
        j["evidence"] = evidence;
        return j;
    }

    std::string to_text() const {
        std::string s = command + ": " + to_string(verdict);
        s += "\n  inputs: " + inputs.dump();
        s += "\n  evidence: " + evidence.dump();
        return s;
    }
};

// pass -> 0, refuted/fail -> 1, inconclusive -> 2 (3 is reserved for usage errors)
inline int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        default: return 2;
    }
}

}  // namespace coarse
