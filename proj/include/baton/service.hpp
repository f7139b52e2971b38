#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace baton::service {

inline constexpr int kMaxSampleCount = 100000;

struct Response {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

// Route handlers. Each depends only on its arguments; error bodies are
// {"code", "message", "detail"?} with codes
//   bad_document      400  body or embedded pattern unreadable
//   bad_request       400  missing/out-of-range numeric parameters
//   unsupported_beats 404  no built-in pattern for that beat count
//   not_found         404  unknown route
//   validation_failed 422  pattern rejected; detail carries the report
Response get_default(std::string_view beats);
Response post_validate(std::string_view body);
Response post_sample(std::string_view body);
Response post_speed_profile(std::string_view body);
Response get_health();

// Dispatches the versioned routes under /api/v1.
Response route(std::string_view method, std::string_view path, std::string_view body);

// HTTP front end over route(). Handlers run on the server's worker pool.
class PlaybackServer {
public:
    PlaybackServer();
    ~PlaybackServer();
    PlaybackServer(const PlaybackServer&) = delete;
    PlaybackServer& operator=(const PlaybackServer&) = delete;

    // Binds without serving. Port 0 picks a free port. Returns the bound
    // port, or -1 on failure.
    int bind(const std::string& host, int port);

    // Serves until stop(); returns false if the socket loop failed.
    bool run();
    void stop();
    bool running() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace baton::service
