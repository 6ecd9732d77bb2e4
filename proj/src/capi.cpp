#include "cosetlab/cosetlab.h"

#include <string>

#include "common/errors.hpp"
#include "runner/experiment.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

}  // namespace

struct cosetlab_experiment {
  std::string config_json;     // as supplied by the caller
  std::string canonical;       // defaults applied
  std::string report;          // empty until a run completes
  bool has_report = false;
};

extern "C" {

const char* cosetlab_version(void) {
  static const std::string v = cosetlab::runner::version();
  return v.c_str();
}

const char* cosetlab_last_error(void) { return g_last_error.c_str(); }

cosetlab_experiment* cosetlab_experiment_create(const char* config_json) {
  if (!config_json) {
    set_error("config_json is NULL");
    return nullptr;
  }
  try {
    auto* e = new cosetlab_experiment;
    e->config_json = config_json;
    e->canonical = cosetlab::runner::validate_config(e->config_json);
    g_last_error.clear();
    return e;
  } catch (const std::exception& ex) {
    set_error(ex.what());
    return nullptr;
  }
}

const char* cosetlab_experiment_config(const cosetlab_experiment* e) {
  return e ? e->canonical.c_str() : nullptr;
}

int cosetlab_experiment_run(cosetlab_experiment* e) {
  if (!e) {
    set_error("experiment handle is NULL");
    return COSETLAB_ERR_INTERNAL;
  }
  try {
    auto result = cosetlab::runner::run_experiment(e->config_json);
    e->report = std::move(result.report_json);
    e->has_report = true;
    g_last_error.clear();
    return result.pass ? COSETLAB_OK : COSETLAB_ERR_FAILED;
  } catch (const cosetlab::ParameterError& ex) {
    set_error(ex.what());
    return COSETLAB_ERR_CONFIG;
  } catch (const cosetlab::ResourceError& ex) {
    set_error(ex.what());
    return COSETLAB_ERR_RESOURCE;
  } catch (const std::exception& ex) {
    set_error(ex.what());
    return COSETLAB_ERR_INTERNAL;
  }
}

const char* cosetlab_experiment_report(const cosetlab_experiment* e) {
  return e && e->has_report ? e->report.c_str() : nullptr;
}

void cosetlab_experiment_destroy(cosetlab_experiment* e) { delete e; }

}  // extern "C"
