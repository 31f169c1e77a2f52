#ifndef FUZZYTS_REPORT_HPP
#define FUZZYTS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace fuzzyts {

struct Witness {
    double point;
    double alpha;
    double residual;
};

// Verdict of one verification check. pass <=> residual <= tolerance and no
// error was raised while evaluating it.
struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    std::optional<std::string> error; // error code name
    std::optional<std::string> error_detail;

    // Records one residual and keeps the running maximum (NaN poisons it).
    void record(double point, double alpha, double r);
    void fail_with(std::string code, std::string detail);
    CheckReport& finalize();
};

} // namespace fuzzyts

#endif
