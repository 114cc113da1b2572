// Copyright 2026 The stancelab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stancelab/annotation.hpp"
#include "stancelab/config.hpp"

namespace httplib {
class Server;
}

namespace stancelab {

struct SessionView {
  std::string session_id;
  std::string annotator_id;
  std::size_t total = 0;
  std::size_t labeled = 0;
  // (sentence_id, sentence_text) of the first unlabelled item.
  std::optional<std::pair<std::string, std::string>> next;
};

// Annotation sessions backed by the label event log. State is rebuilt from
// the log on construction, so a restarted store answers exactly as before.
// All mutations go through one mutex and one log writer.
class SessionStore {
 public:
  // `sentence_texts` maps every item id to the text shown to annotators.
  SessionStore(const std::vector<SessionSpec>& specs,
               const std::vector<std::string>& items,
               std::map<std::string, std::string> sentence_texts,
               std::filesystem::path event_log);

  // Throws UnknownSession.
  SessionView View(const std::string& session_id) const;

  // Throws UnknownSession, UnknownSentence, InvalidEnum (bad label token).
  SessionView PostLabel(const std::string& session_id,
                        const std::string& sentence_id,
                        const std::string& label_token);

  // Throws UnknownSession, IncompleteSession, ItemSetMismatch.
  AgreementResult Agreement(const std::string& a, const std::string& b) const;

  AnnotationSession Session(const std::string& session_id) const;
  std::vector<std::string> SessionIds() const;

 private:
  const AnnotationSession& Find(const std::string& session_id) const;
  SessionView ViewLocked(const AnnotationSession& session) const;

  mutable std::mutex mu_;
  std::map<std::string, AnnotationSession> sessions_;
  std::map<std::string, std::string> sentence_texts_;
  SessionEventLog log_;
};

std::string SessionViewJson(const SessionView& view);
std::string AgreementJson(const AgreementResult& result);

// HTTP front end for a SessionStore:
//   GET  /api/sessions               -> {"sessions": [...]}
//   GET  /api/sessions/{id}/next     -> SessionView
//   POST /api/sessions/{id}/labels   body {"sentence_id", "label"}
//   GET  /api/agreement?a={id}&b={id}
// Static UI assets are served from `static_dir` at "/" when given.
class AnnotationServer {
 public:
  AnnotationServer(SessionStore& store,
                   std::optional<std::filesystem::path> static_dir);
  ~AnnotationServer();

  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Binds and serves until Stop(). Returns false if binding fails.
  bool Listen(const std::string& host, int port);
  // Bind() or BindToAnyPort() (which returns the port, -1 on failure),
  // then ListenAfterBind() to serve.
  bool Bind(const std::string& host, int port);
  int BindToAnyPort(const std::string& host);
  bool ListenAfterBind();
  void Stop();
  bool is_running() const;

 private:
  void Routes();

  SessionStore& store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace stancelab
