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

#include "stancelab/annot_server.hpp"

#include <httplib.h>
#include <json.hpp>

#include "stancelab/error.hpp"
#include "stancelab/text_util.hpp"

namespace stancelab {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kPlaceholderPage =
    "<!doctype html><html><head><meta charset=\"utf-8\">"
    "<title>stancelab annotation</title></head><body>"
    "<p>The annotation UI assets are not installed. Set "
    "<code>annotation.static_dir</code> to the built UI directory. The JSON "
    "API is available under <code>/api/</code>.</p></body></html>";

void SendJson(httplib::Response& res, int status, const std::string& body) {
  res.status = status;
  res.set_content(body, "application/json; charset=utf-8");
}

void SendError(httplib::Response& res, int status, const std::string& message) {
  ojson j;
  j["error"] = message;
  SendJson(res, status, j.dump());
}

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownSentence:
      return 404;
    case ErrorCode::kInvalidEnum:
      return 422;
    case ErrorCode::kIncompleteSession:
    case ErrorCode::kItemSetMismatch:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kDegenerateMarginals:
      return 409;
    default:
      return 500;
  }
}

template <typename F>
void Handle(httplib::Response& res, F f) {
  try {
    f();
  } catch (const Error& e) {
    SendError(res, StatusFor(e.code()), e.what());
  } catch (const std::exception& e) {
    SendError(res, 500, e.what());
  }
}

}  // namespace

SessionStore::SessionStore(const std::vector<SessionSpec>& specs,
                           const std::vector<std::string>& items,
                           std::map<std::string, std::string> sentence_texts,
                           std::filesystem::path event_log)
    : sentence_texts_(std::move(sentence_texts)), log_(std::move(event_log)) {
  for (const SessionSpec& spec : specs) {
    if (!sessions_
             .emplace(spec.session_id,
                      AnnotationSession(spec.session_id, spec.annotator_id,
                                        items))
             .second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "session '" + spec.session_id + "' defined twice");
    }
  }
  ApplyEvents(sessions_, log_.ReadAll());
}

const AnnotationSession& SessionStore::Find(
    const std::string& session_id) const {
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kUnknownSession,
                "unknown session '" + session_id + "'");
  }
  return it->second;
}

SessionView SessionStore::ViewLocked(const AnnotationSession& session) const {
  SessionView view;
  view.session_id = session.session_id();
  view.annotator_id = session.annotator_id();
  view.total = session.items().size();
  view.labeled = session.labeled_count();
  if (auto next = session.next_unlabeled()) {
    auto it = sentence_texts_.find(*next);
    view.next.emplace(*next,
                      it == sentence_texts_.end() ? std::string() : it->second);
  }
  return view;
}

SessionView SessionStore::View(const std::string& session_id) const {
  std::lock_guard lock(mu_);
  return ViewLocked(Find(session_id));
}

SessionView SessionStore::PostLabel(const std::string& session_id,
                                    const std::string& sentence_id,
                                    const std::string& label_token) {
  std::lock_guard lock(mu_);
  const AnnotationSession& current = Find(session_id);
  const std::optional<Label> label = ParseLabelToken(label_token);
  if (!label || label_token != LabelToken(*label)) {
    throw Error(ErrorCode::kInvalidEnum,
                "label must be one of helpful, harmful, neither; got '" +
                    label_token + "'");
  }
  LabelEvent event{session_id, current.annotator_id(), sentence_id, *label,
                   UtcNow()};
  AnnotationSession updated =
      current.WithLabel(sentence_id, *label, event.at);  // validates the id
  log_.Append(event);
  AnnotationSession& slot = sessions_.at(session_id);
  slot = std::move(updated);
  return ViewLocked(slot);
}

AgreementResult SessionStore::Agreement(const std::string& a,
                                        const std::string& b) const {
  std::lock_guard lock(mu_);
  return CohenKappa(Find(a), Find(b));
}

AnnotationSession SessionStore::Session(const std::string& session_id) const {
  std::lock_guard lock(mu_);
  return Find(session_id);
}

std::vector<std::string> SessionStore::SessionIds() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> ids;
  for (const auto& [id, session] : sessions_) ids.push_back(id);
  return ids;
}

std::string SessionViewJson(const SessionView& view) {
  ojson j;
  j["session_id"] = view.session_id;
  j["annotator_id"] = view.annotator_id;
  j["total"] = view.total;
  j["labeled"] = view.labeled;
  if (view.next) {
    j["next"] = {{"sentence_id", view.next->first},
                 {"sentence_text", view.next->second}};
  } else {
    j["next"] = nullptr;
  }
  return j.dump();
}

std::string AgreementJson(const AgreementResult& r) {
  ojson j;
  j["kappa"] = r.kappa;
  j["observed_agreement"] = r.observed_agreement;
  j["expected_agreement"] = r.expected_agreement;
  j["n_items"] = r.n_items;
  j["labels"] = {"helpful", "harmful", "neither"};
  j["cross_table"] = ojson::array();
  for (const auto& row : r.cross_table) {
    j["cross_table"].push_back(ojson(row));
  }
  return j.dump();
}

AnnotationServer::AnnotationServer(
    SessionStore& store, std::optional<std::filesystem::path> static_dir)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
  Routes();
  if (static_dir) {
    server_->set_mount_point("/", static_dir->string());
  } else {
    server_->Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(std::string(kPlaceholderPage), "text/html; charset=utf-8");
    });
  }
}

AnnotationServer::~AnnotationServer() { Stop(); }

void AnnotationServer::Routes() {
  server_->Get("/api/sessions",
               [this](const httplib::Request&, httplib::Response& res) {
                 Handle(res, [&] {
                   ojson j;
                   j["sessions"] = store_.SessionIds();
                   SendJson(res, 200, j.dump());
                 });
               });
  server_->Get(R"(/api/sessions/([^/]+)/next)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 Handle(res, [&] {
                   SendJson(res, 200, SessionViewJson(store_.View(req.matches[1])));
                 });
               });
  server_->Post(
      R"(/api/sessions/([^/]+)/labels)",
      [this](const httplib::Request& req, httplib::Response& res) {
        Handle(res, [&] {
          nlohmann::json body;
          try {
            body = nlohmann::json::parse(req.body);
          } catch (const nlohmann::json::exception&) {
            SendError(res, 400, "body must be a JSON object");
            return;
          }
          if (!body.is_object() || !body.contains("sentence_id") ||
              !body["sentence_id"].is_string() || !body.contains("label")) {
            SendError(res, 400, "body needs sentence_id and label");
            return;
          }
          if (!body["label"].is_string()) {
            SendError(res, 422, "label must be a string");
            return;
          }
          const SessionView view = store_.PostLabel(
              req.matches[1], body["sentence_id"].get<std::string>(),
              body["label"].get<std::string>());
          SendJson(res, 200, SessionViewJson(view));
        });
      });
  server_->Get("/api/agreement",
               [this](const httplib::Request& req, httplib::Response& res) {
                 Handle(res, [&] {
                   if (!req.has_param("a") || !req.has_param("b")) {
                     SendError(res, 400, "query needs a and b");
                     return;
                   }
                   SendJson(res, 200,
                            AgreementJson(store_.Agreement(
                                req.get_param_value("a"),
                                req.get_param_value("b"))));
                 });
               });
}

bool AnnotationServer::Listen(const std::string& host, int port) {
  return server_->listen(host, port);
}

bool AnnotationServer::Bind(const std::string& host, int port) {
  return server_->bind_to_port(host, port);
}

int AnnotationServer::BindToAnyPort(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool AnnotationServer::ListenAfterBind() { return server_->listen_after_bind(); }

void AnnotationServer::Stop() {
  if (server_) server_->stop();
}

bool AnnotationServer::is_running() const { return server_->is_running(); }

}  // namespace stancelab
