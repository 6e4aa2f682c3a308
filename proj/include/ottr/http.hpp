#pragma once

#include <optional>
#include <string>

#include <httplib.h>

#include "ottr/core.hpp"
#include "ottr/probe.hpp"

// Real-network pieces: the default URL prober and a small GET helper for
// borrowed-chapter fetches. Everything else in the tool stays offline.

namespace ottr {

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;    // /path?query ("/" when absent)
};

inline std::optional<SplitUrl> split_url(const std::string& url) {
    if (!is_url(url)) return std::nullopt;
    size_t scheme_end = url.find("://");
    size_t host_start = scheme_end + 3;
    size_t path_start = url.find('/', host_start);
    if (path_start == std::string::npos) return SplitUrl{url, "/"};
    return SplitUrl{url.substr(0, path_start), url.substr(path_start)};
}

// Probes with a HEAD-less GET (some servers reject HEAD), bounded by
// `timeout_seconds`, retrying once on transport failure.
class RealUrlProber final : public UrlProber {
public:
    explicit RealUrlProber(int timeout_seconds = 10, int retries = 1)
        : timeout_seconds_(timeout_seconds), retries_(retries) {}

    ProbeResult probe(const std::string& url) const override {
        auto split = split_url(url);
        if (!split) return {0, "unsupported URL"};
        std::string last_error = "no attempt made";
        for (int attempt = 0; attempt <= retries_; ++attempt) {
            httplib::Client client(split->origin);
            client.set_connection_timeout(timeout_seconds_, 0);
            client.set_read_timeout(timeout_seconds_, 0);
            client.set_follow_location(true);
            auto res = client.Get(split->path);
            if (res) return {res->status, ""};
            last_error = httplib::to_string(res.error());
        }
        return {0, last_error};
    }

private:
    int timeout_seconds_;
    int retries_;
};

inline std::optional<std::string> http_get(const std::string& url, std::string* error = nullptr,
                                           int timeout_seconds = 10) {
    auto split = split_url(url);
    if (!split) {
        if (error) *error = "unsupported URL: " + url;
        return std::nullopt;
    }
    httplib::Client client(split->origin);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_follow_location(true);
    auto res = client.Get(split->path);
    if (!res) {
        if (error) *error = "connection failed: " + url;
        return std::nullopt;
    }
    if (res->status < 200 || res->status > 299) {
        if (error) *error = "HTTP " + std::to_string(res->status) + ": " + url;
        return std::nullopt;
    }
    return res->body;
}

}  // namespace ottr
