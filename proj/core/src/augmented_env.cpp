#include "sofe/augment/augmented_env.hpp"

namespace sofe {

AugmentedEnv::AugmentedEnv(std::unique_ptr<Env> env, std::shared_ptr<BonusEngine> engine,
                           StatEncoding enc)
    : env_(std::move(env)), engine_(std::move(engine)), enc_(enc) {
  check_encoding_compatible(*engine_, enc_);
}

AugStepResult AugmentedEnv::reset(uint64_t seed) {
  StepResult base = env_->reset(seed);
  engine_->begin_episode(env_->state_key(), base.observation);
  AugStepResult out;
  out.obs = {std::move(base.observation), encode_stats(*engine_, enc_, env_->spec())};
  out.cell = base.cell;
  out.step_index = base.step_index;
  return out;
}

AugStepResult AugmentedEnv::step(int action) {
  StepResult base = env_->step(action);
  const double intrinsic = engine_->on_transition(env_->state_key(), base.observation);
  AugStepResult out;
  out.extrinsic = base.extrinsic_reward;
  out.intrinsic = intrinsic;
  out.combined = combine_rewards(base.extrinsic_reward, intrinsic,
                                 engine_->config().intrinsic_scale);
  out.done = base.done;
  out.cell = base.cell;
  out.step_index = base.step_index;
  out.obs = {std::move(base.observation), encode_stats(*engine_, enc_, env_->spec())};
  return out;
}

}  // namespace sofe
