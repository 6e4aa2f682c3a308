#pragma once

#include <map>
#include <string>

#include "ottr/core.hpp"

// URL probing is isolated behind this interface so the whole check suite
// runs offline under test. Implementations must tolerate concurrent calls.

namespace ottr {

struct ProbeResult {
    int status = 0;
    std::string error;  // transport-level failure; empty when a status arrived

    bool ok() const { return error.empty() && status >= 200 && status <= 399; }

    std::string describe() const {
        if (!error.empty()) return "probe failed: " + error;
        return std::to_string(status);
    }
};

class UrlProber {
public:
    virtual ~UrlProber() = default;

    virtual ProbeResult probe(const std::string& url) const = 0;
};

// Fixture prober: a fixed url -> status map, with a default for the rest.
class FixtureUrlProber final : public UrlProber {
public:
    FixtureUrlProber() = default;
    explicit FixtureUrlProber(std::map<std::string, int> statuses, int default_status = 200)
        : statuses_(std::move(statuses)), default_status_(default_status) {}

    ProbeResult probe(const std::string& url) const override {
        auto it = statuses_.find(url);
        int status = it == statuses_.end() ? default_status_ : it->second;
        if (status <= 0) return {0, "connection refused"};
        return {status, ""};
    }

private:
    std::map<std::string, int> statuses_;
    int default_status_ = 200;
};

}  // namespace ottr
