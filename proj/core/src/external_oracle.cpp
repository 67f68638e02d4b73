#include "paretoenum/external_oracle.hpp"

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

#include "paretoenum/errors.hpp"

namespace paretoenum {

namespace {

// Writes all of `data`, reporting EPIPE as failure instead of dying on SIGPIPE.
bool write_all(int fd, const std::string& data) {
  sigset_t pipe_set;
  sigset_t old_set;
  sigemptyset(&pipe_set);
  sigaddset(&pipe_set, SIGPIPE);
  pthread_sigmask(SIG_BLOCK, &pipe_set, &old_set);

  bool ok = true;
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ok = false;
      break;
    }
    written += static_cast<std::size_t>(n);
  }

  if (!ok) {
    // Swallow the SIGPIPE raised for this thread before unblocking.
    sigset_t pending;
    sigpending(&pending);
    if (sigismember(&pending, SIGPIPE)) {
      const timespec zero{0, 0};
      sigtimedwait(&pipe_set, nullptr, &zero);
    }
  }
  pthread_sigmask(SIG_SETMASK, &old_set, nullptr);
  return ok;
}

}  // namespace

ExternalProcessOracle::ExternalProcessOracle(std::size_t arity, std::vector<std::string> argv)
    : FeasibilityOracle(arity), argv_(std::move(argv)) {
  if (argv_.empty() || argv_.front().empty()) {
    throw UsageError("external oracle needs a command");
  }

  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
  }

  std::vector<char*> c_argv;
  for (auto& a : argv_) c_argv.push_back(a.data());
  c_argv.push_back(nullptr);

  pid_ = ::fork();
  if (pid_ < 0) {
    const int err = errno;
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw std::runtime_error(std::string("fork: ") + std::strerror(err));
  }
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execvp(c_argv[0], c_argv.data());
    _exit(127);
  }

  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
}

ExternalProcessOracle::~ExternalProcessOracle() { shutdown(); }

std::unique_ptr<ExternalProcessOracle> ExternalProcessOracle::from_shell(
    std::size_t arity, const std::string& command_line) {
  return std::make_unique<ExternalProcessOracle>(
      arity, std::vector<std::string>{"/bin/sh", "-c", command_line});
}

std::string ExternalProcessOracle::encode_query(const Point& x) {
  std::string line;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (i) line += ' ';
    line += std::to_string(x[i]);
  }
  line += '\n';
  return line;
}

bool ExternalProcessOracle::read_line(std::string& line) {
  for (;;) {
    const auto eol = pending_.find('\n');
    if (eol != std::string::npos) {
      line = pending_.substr(0, eol);
      pending_.erase(0, eol + 1);
      return true;
    }
    char buf[256];
    const ssize_t n = ::read(from_child_, buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    pending_.append(buf, static_cast<std::size_t>(n));
  }
}

bool ExternalProcessOracle::query(const Point& x) {
  if (to_child_ < 0) throw OracleFailure("external oracle already failed", x);
  if (!write_all(to_child_, encode_query(x))) {
    shutdown();
    throw OracleFailure("external oracle process closed its input", x);
  }
  std::string reply;
  if (!read_line(reply)) {
    shutdown();
    throw OracleFailure("external oracle process exited before replying", x);
  }
  if (reply == "1") return true;
  if (reply == "0") return false;
  shutdown();
  throw OracleFailure("external oracle sent malformed reply \"" + reply + "\"", x);
}

void ExternalProcessOracle::shutdown() noexcept {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
  if (from_child_ >= 0) {
    ::close(from_child_);
    from_child_ = -1;
  }
  if (pid_ > 0) {
    using namespace std::chrono_literals;
    int status = 0;
    const auto deadline = std::chrono::steady_clock::now() + 2s;
    while (::waitpid(pid_, &status, WNOHANG) == 0) {
      if (std::chrono::steady_clock::now() > deadline) {
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, &status, 0);
        break;
      }
      std::this_thread::sleep_for(1ms);
    }
    pid_ = -1;
  }
}

}  // namespace paretoenum
