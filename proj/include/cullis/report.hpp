#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cullis::verify {

// One reproducible failure: `key` orders counterexamples deterministically,
// `data` carries everything needed to replay the case standalone.
struct Counterexample {
    std::string key;
    std::map<std::string, std::string> data;
};

struct Report {
    std::string check;
    std::map<std::string, std::string> params;
    uint64_t cases = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    bool pass() const { return counterexamples.empty(); }

    void sort_counterexamples() {
        std::sort(counterexamples.begin(), counterexamples.end(),
                  [](const Counterexample& a, const Counterexample& b) { return a.key < b.key; });
    }

    void print_text(std::ostream& os) const {
        os << "check: " << check << '\n';
        for (const auto& [k, v] : params) os << "  " << k << ": " << v << '\n';
        os << "  cases: " << cases << '\n';
        os << "  counterexamples: " << counterexamples.size() << '\n';
        for (const auto& ce : counterexamples) {
            os << "  counterexample " << ce.key << ":\n";
            for (const auto& [k, v] : ce.data) {
                os << "    " << k << ": ";
                // keep multi-line payloads (matrices) readable
                for (char c : v)
                    if (c == '\n')
                        os << "\\n";
                    else
                        os << c;
                os << '\n';
            }
        }
        for (const auto& n : notes) os << "  note: " << n << '\n';
        os << "  wall_seconds: " << wall_seconds << '\n';
        os << "  result: " << (pass() ? "pass" : "FAIL") << '\n';
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["check"] = check;
        j["params"] = params;
        j["cases"] = cases;
        nlohmann::json ces = nlohmann::json::array();
        for (const auto& ce : counterexamples) {
            nlohmann::json c;
            c["key"] = ce.key;
            c["data"] = ce.data;
            ces.push_back(c);
        }
        j["counterexamples"] = ces;
        j["notes"] = notes;
        j["wall_seconds"] = wall_seconds;
        j["pass"] = pass();
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        print_text(os);
        return os.str();
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace cullis::verify
