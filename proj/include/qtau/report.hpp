#pragma once

#include "qtau/serialize.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace qtau {

// Outcome of one verification campaign.  Bodies are deterministic for a
// fixed configuration; wall-clock timing lives in a separate field that
// consumers exclude when comparing reports.
class VerificationReport {
public:
    struct Item {
        std::string item;      // partition, monomial, hbar order, ...
        std::string expected;
        std::string actual;
        bool pass = true;
    };

    VerificationReport(std::string campaign, Json parameters)
        : campaign_(std::move(campaign)), parameters_(std::move(parameters)) {}

    void check(const std::string& item, const std::string& expected, const std::string& actual) {
        items_.push_back({item, expected, actual, expected == actual});
    }
    template <typename T>
    void check_eq(const std::string& item, const T& expected, const T& actual) {
        items_.push_back({item, expected.str(), actual.str(), expected == actual});
    }
    void check_true(const std::string& item, bool ok, const std::string& detail = "") {
        items_.push_back({item, "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
    }

    const std::string& campaign() const { return campaign_; }
    const std::vector<Item>& items() const { return items_; }
    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& i : items_) n += !i.pass;
        return n;
    }
    bool passed() const { return failed_count() == 0; }

    void set_seconds(double s) { seconds_ = s; }
    double seconds() const { return seconds_; }

    Json to_json(bool include_timing = true) const {
        Json j;
        j["campaign"] = campaign_;
        j["parameters"] = parameters_;
        Json items = Json::array();
        for (const auto& i : items_)
            items.push_back(Json{{"item", i.item},
                                 {"expected", i.expected},
                                 {"actual", i.actual},
                                 {"pass", i.pass}});
        j["items"] = std::move(items);
        j["summary"] = Json{{"total", items_.size()},
                            {"passed", items_.size() - failed_count()},
                            {"failed", failed_count()},
                            {"pass", passed()}};
        if (include_timing) j["timing"] = Json{{"seconds", seconds_}};
        return j;
    }

    // One-line human summary.
    std::string summary_line() const {
        return campaign_ + ": " + (passed() ? "PASS" : "FAIL") + " (" +
               std::to_string(items_.size() - failed_count()) + "/" +
               std::to_string(items_.size()) + " items)";
    }

private:
    std::string campaign_;
    Json parameters_;
    std::vector<Item> items_;
    double seconds_ = 0.0;
};

// Scope timer filling in the report's timing field.
class ReportTimer {
public:
    explicit ReportTimer(VerificationReport& r)
        : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        auto dt = std::chrono::steady_clock::now() - start_;
        report_.set_seconds(std::chrono::duration<double>(dt).count());
    }

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qtau
