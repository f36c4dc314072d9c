window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#a-taste-of-the-api","introduction.html#reproducibility","probability.html#the-probability-toolkit","probability.html#distributions-and-channels","probability.html#the-first-variation-of-mutual-information","probability.html#a-brute-force-capacity-oracle","probability.html#scores-and-the-simplex","chase.html#the-chase-game","chase.html#running-it","meanfield.html#mean-field-population-codes","meanfield.html#why-factorization-buys-locality","meanfield.html#running-it","filtering.html#filtering-event-streams","filtering.html#recursive-equals-batch","filtering.html#the-factorized-recursion","environments.html#synthetic-worlds","environments.html#exactly-factorizable-worlds","spiking.html#the-spiking-network","spiking.html#running-it","spiking.html#what-training-actually-does","cli.html#the-command-line-interface","cli.html#subcommands","cli.html#common-flags","cli.html#outputs","cli.html#exit-codes-and-logging","cli.html#example-a-spiking-experiment-from-a-world-file","cli.html#the-validate-subcommand"],"index":{"documentStore":{"docInfo":{"0":{"body":220,"breadcrumbs":2,"title":1},"1":{"body":97,"breadcrumbs":3,"title":2},"10":{"body":52,"breadcrumbs":8,"title":4},"11":{"body":133,"breadcrumbs":7,"title":3},"12":{"body":127,"breadcrumbs":5,"title":1},"13":{"body":72,"breadcrumbs":6,"title":3},"14":{"body":135,"breadcrumbs":6,"title":3},"15":{"body":120,"breadcrumbs":5,"title":2},"16":{"body":115,"breadcrumbs":4,"title":2},"17":{"body":119,"breadcrumbs":5,"title":3},"18":{"body":201,"breadcrumbs":4,"title":2},"19":{"body":79,"breadcrumbs":3,"title":1},"2":{"body":27,"breadcrumbs":2,"title":1},"20":{"body":131,"breadcrumbs":4,"title":2},"21":{"body":40,"breadcrumbs":6,"title":3},"22":{"body":73,"breadcrumbs":4,"title":1},"23":{"body":60,"breadcrumbs":5,"title":2},"24":{"body":77,"breadcrumbs":4,"title":1},"25":{"body":64,"breadcrumbs":6,"title":3},"26":{"body":75,"breadcrumbs":8,"title":5},"27":{"body":40,"breadcrumbs":5,"title":2},"3":{"body":27,"breadcrumbs":4,"title":2},"4":{"body":91,"breadcrumbs":4,"title":2},"5":{"body":74,"breadcrumbs":6,"title":4},"6":{"body":57,"breadcrumbs":6,"title":4},"7":{"body":62,"breadcrumbs":4,"title":2},"8":{"body":154,"breadcrumbs":4,"title":2},"9":{"body":145,"breadcrumbs":3,"title":1}},"docs":{"0":{"body":"A perceptual system earns its keep by preserving information: whatever the\\ndownstream circuits ultimately do with a stimulus x, they can only do it\\nthrough the code y the sensory layer hands them. That makes the mutual\\ninformation I(x; y) a natural training objective for the code p(y|x) —\\nmaximize it and no downstream consumer is ever starved of evidence it could\\nhave had. The catch is that I(x; y) looks hopelessly non-local. Its gradient with\\nrespect to one response probability involves the marginal p(y), an average\\nover every stimulus the world can produce — nothing a single neuron could\\nknow. The resolution explored throughout this crate is to replace the\\nmarginal with a trainable auxiliary q(y) that chases it: q descends\\ntoward the code’s outputs on the samples that actually occur, while the code\\nascends the log-ratio log(p(y|x)/q(y)). Run the two updates on separate\\ntimescales — the chaser faster than the code — and the pair climbs the true\\ninformation objective using only locally observable quantities. The crate develops this idea as a ladder of increasingly biological\\nconstraints, one module per rung: The probability toolkit ( prob, simplex) — exact\\nentropies, mutual information, its first variation, and a brute-force\\ncapacity oracle on finite alphabets. Every later rung is validated\\nagainst this one. The chase game ( chase) — the two-player dynamics in\\ntheir simplest form: one code table, one auxiliary marginal. Mean-field population codes ( meanfield) — a\\npopulation of binary neurons, each chasing its own lateral predictor q(y_i|y_-i) so that all required signals are locally available. Filtering event streams ( filter) — recursive\\nBayesian evidence accumulation within a perceptual event, and why the\\norder of stimuli cannot matter. Synthetic worlds ( env) — latent-variable\\nenvironments that emit exchangeable stimulus streams, including exactly\\nfactorizable ones. The spiking network ( spiking) — the continuous-time\\nendpoint: Poisson-style spiking neurons that learn log likelihood-ratios\\nonline inside a bounded firing-rate band. A final chapter documents the command-line interface, which\\nexposes each rung as a reproducible, seeded experiment.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"Entropies and mutual information are exact and measured in nats: #![allow(unused)] fn main() {\\nuse infomax::prob::{entropy, mutual_information, FiniteDistribution, ConditionalTable}; let px = FiniteDistribution::new(vec![0.25, 0.75])?;\\nassert!((entropy(&px) - 0.5623351446188083).abs() < 1e-12); // a binary symmetric channel with 10% flips\\nlet bsc = ConditionalTable::from_rows(vec![vec![0.9, 0.1], vec![0.1, 0.9]])?;\\nlet uniform = FiniteDistribution::uniform(2);\\nlet mi = mutual_information(&uniform, &bsc)?;\\nassert!((mi - 0.3680642071684971).abs() < 1e-12); Ok::<(), infomax::error::Error>(()) } The chase game maximizes that quantity from samples alone: #![allow(unused)] fn main() {\\nuse infomax::chase::{run_chase, ChaseConfig};\\nuse infomax::prob::FiniteDistribution; let cfg = ChaseConfig { steps: 2_000, seed: 7, ..ChaseConfig::default() };\\nlet log = run_chase(&FiniteDistribution::uniform(3), &cfg)?;\\nlet mi = log.column(\\"mi_nats\\").unwrap();\\nassert!(mi.last().unwrap() > mi.first().unwrap()); Ok::<(), infomax::error::Error>(()) } Every code block in this book is also a doc-test in the crate’s sources, and\\nan integration test ( tests/book_sync.rs) checks that the two stay\\nbyte-identical — if a snippet here compiles and passes under cargo test,\\nit is exactly what you will read in the book.","breadcrumbs":"Introduction » A taste of the API","id":"1","title":"A taste of the API"},"10":{"body":"One neuron with a K-way softmax output is a fine abstraction, but a\\nsensory layer is a population of binary units. The meanfield module\\nscales the chase game to n neurons under the factorization p(y|x) = Π_i p(y_i | x), the independent-neuron (mean-field) hypothesis: given the stimulus, neurons\\nfire independently. Each neuron’s response is a Bernoulli probability θ_i(x) = p(y_i = 1 | x), stored as a logit so that updates can never\\nleave (0, 1).","breadcrumbs":"Mean-field population codes » Mean-field population codes","id":"10","title":"Mean-field population codes"},"11":{"body":"Under factorization, the first variation of the joint MI with respect to\\none neuron’s parameters takes the same form as in the single-neuron game,\\nwith the population marginal replaced by the conditional of that neuron\\ngiven the rest, p(y_i | y_-i). The module computes this conditional\\nexactly (by enumeration over the 2^n joint outcomes, capped at ENUM_CAP = 12 neurons) for use in tests, and factorized_variation\\nverifies that the per-neuron variations of a composite perturbation sum to\\nthe variation of the joint — the decomposition that makes per-neuron\\nlearning sound. The learning rule itself never enumerates anything. Each neuron runs its\\nown chase: a lateral predictor q_i(y_i | y_-i) — a table indexed by the\\nobserved firing pattern of the other neurons — descends toward neuron i’s response probability on each sample; the response logit ascends the log-odds gap, Δl_i = η · 2θ_i(1−θ_i) · (logit θ_i − logit q_i), where the 2θ(1−θ) factor is the Jacobian of the logit parameterization. Everything on the right-hand side is locally available: the neuron’s own\\nstate, the stimulus, and the rest of the population’s spikes on the current\\nsample. With n = 1 the predictor has a single cell and the rule reduces\\nexactly to the chase game of the previous chapter — a reduction the unit\\ntests check term by term.","breadcrumbs":"Mean-field population codes » Why factorization buys locality","id":"11","title":"Why factorization buys locality"},"12":{"body":"#![allow(unused)] fn main() {\\nuse infomax::meanfield::{run_meanfield, MeanfieldConfig};\\nuse infomax::prob::FiniteDistribution; let px = FiniteDistribution::uniform(4);\\nlet cfg = MeanfieldConfig { steps: 30_000, seed: 2, ..MeanfieldConfig::default() };\\nlet log = run_meanfield(&px, 2, &cfg).unwrap();\\nlet mi = log.column(\\"mi_nats\\").unwrap();\\n// two binary neurons on four equiprobable inputs: MI climbs toward ln 4\\nassert!(mi.last().unwrap() > mi.first().unwrap());\\nassert!(log.last(\\"mean_predictor_gap\\").unwrap() < 0.2); } Two binary neurons can carry at most ln 4 nats, and on a uniform 4-symbol\\ninput the optimum is the obvious one: each neuron claims one bit of the\\nstimulus index. The exact-MI column (again computed with the ground-truth\\ntools, invisible to the learner) climbs toward that ceiling; with the\\ndefault budget of 200 000 steps it lands within a few parts in 10^4 of ln 4 ≈ 1.3863. The mean_predictor_gap column tracks the average\\ndistance between each lateral predictor and the neuron’s true conditional —\\nthe population-level analogue of q_gap_max. Because the factorized family is a strict subset of all channels, the\\npopulation cannot beat the capacity oracle of the probability toolkit; the acceptance tests compare its\\nendpoint against an independent coordinate-wise grid search over factorized\\ncodes instead, which it meets.","breadcrumbs":"Mean-field population codes » Running it","id":"12","title":"Running it"},"13":{"body":"The chapters so far trained a code against isolated stimuli. Perception is\\nnot like that: stimuli arrive in events — stretches of time during which\\nsome latent cause z holds still while noisy observations x_1, x_2, …\\npour in. Within an event the right computation is not learning but evidence accumulation: maintain the posterior p(z | x_{1:t}) and update\\nit as each stimulus lands. The filter module implements this in log space. A PosteriorState holds\\nunnormalized log-beliefs; filter_update adds the log-likelihood row of\\nthe observed stimulus and renormalizes lazily. Working in logs is not a\\nstyle choice — a probability-space product of per-stimulus factors\\nunderflows after a few dozen observations.","breadcrumbs":"Filtering event streams » Filtering event streams","id":"13","title":"Filtering event streams"},"14":{"body":"Because the latent is static and the likelihood time-invariant within an\\nevent, Bayes’ rule telescopes: the posterior after T stimuli is the prior\\ntimes a product of per-stimulus factors, in any order. Two consequences\\nare checked exactly: Recursive = batch. Folding stimuli in one at a time lands on the\\nsame posterior as a single batch computation over the whole event. Order invariance. The stimulus sequence is exchangeable — any\\npermutation yields the same posterior. batch_posterior makes this bit-exact, not merely approximate, by reducing the sequence to\\nper-symbol counts first and computing Σ_x c_x · log p(x|z): two\\npermutations produce identical counts, hence identical floating-point\\noperations, hence identical bits. The acceptance suite asserts equality\\nwith == on every permutation of a test stream. #![allow(unused)] fn main() {\\nuse infomax::filter::{batch_posterior, filter_update, LikelihoodModel, PosteriorState};\\nuse infomax::prob::{ConditionalTable, FiniteDistribution}; let prior = FiniteDistribution::uniform(2);\\nlet rows = vec![vec![0.8, 0.2], vec![0.2, 0.8]];\\nlet lik = LikelihoodModel::new(ConditionalTable::from_rows(rows).unwrap());\\nlet xs = [0, 0, 1, 0]; // one stimulus at a time...\\nlet mut state = PosteriorState::from_prior(&prior);\\nfor &x in &xs { state = filter_update(&state, &lik, x).unwrap();\\n}\\n// ...lands on the all-at-once posterior\\nlet batch = batch_posterior(&prior, &lik, &xs).unwrap();\\nfor (a, b) in state.belief().probs().iter().zip(batch.probs()) { assert!((a - b).abs() < 1e-12);\\n} }","breadcrumbs":"Filtering event streams » Recursive equals batch","id":"14","title":"Recursive equals batch"},"15":{"body":"A population of neurons cannot maintain a joint posterior over 2^n code\\nwords. But if the world’s likelihood factorizes per neuron — p(x | y) = f(x) · Π_i g_i(x, y_i) — then the joint posterior over y factorizes too, and each neuron can run\\nits own two-hypothesis filter. FactorizedPosterior keeps one log-odds per\\nneuron; factorized_filter_update adds log( g_i(x, 1) / g_i(x, 0) ) — a\\nquantity depending only on the current stimulus and the neuron’s own\\nlikelihood factor. The base factor f(x) cancels in the odds, which is why\\nno neuron ever needs it. When the factorization holds exactly, the per-neuron marginals of the joint\\nrecursion and the outputs of the factorized recursion agree to within\\naccumulated rounding ( factorized_vs_joint_gap measures the worst gap over\\nan event; the tests require < 1e-9). The next chapter\\nconstructs worlds where it does hold exactly. This per-neuron log-odds accumulation — add the log-likelihood-ratio of\\neach arriving stimulus to a running state — is precisely the computation\\nthe spiking network of the final chapter implements with membrane dynamics,\\nand the likelihood ratios it adds are precisely what the learning rule\\nmust discover.","breadcrumbs":"Filtering event streams » The factorized recursion","id":"15","title":"The factorized recursion"},"16":{"body":"Training and evaluating the filters and the spiking network requires a\\nworld to perceive. The env module provides latent-variable environments\\nwith exactly the structure the theory assumes: an event samples one latent z from latent_prior, then emits event_len i.i.d. stimuli from the emission row p(x|z); consecutive events either resample the latent or, with probability persistence, carry it over. Sampling i.i.d. within an event is what makes the stimulus stream\\nexchangeable by construction — the order-invariance property the filter\\nchapter relies on is not an approximation here but a design decision of the\\ngenerative process. An EnvironmentSpec is plain serializable data (JSON on disk, unknown keys\\nrejected), and validate checks that the prior and every emission row are\\nproper distributions before anything samples from it. EventStream wraps a\\nspec with a seeded generator: #![allow(unused)] fn main() {\\nuse infomax::env::{build_factorized_env, EventStream}; let spec = build_factorized_env(2, 10, 3).unwrap();\\nassert_eq!(spec.n_stimuli(), 4); // 2 binary components => 4 stimuli\\nlet mut stream = EventStream::new(&spec, 5);\\nlet (z, xs) = stream.next_event();\\nassert!(z < spec.n_latent());\\nassert_eq!(xs.len(), 10);\\nassert!(xs.iter().all(|&x| x < spec.n_stimuli())); }","breadcrumbs":"Synthetic worlds » Synthetic worlds","id":"16","title":"Synthetic worlds"},"17":{"body":"The factorized filter of the previous chapter needs worlds where p(x | y) = f(x) · Π_i g_i(x, y_i) holds exactly, not approximately — otherwise a test failure could mean\\neither a broken recursion or a broken world, and you cannot tell which. build_factorized_env achieves exactness structurally: the stimulus\\nalphabet is a product of n independent binary components, and neuron i’s bit y_i drives component x^i through its own private 2×2 channel.\\nIndependence across components means the joint emission is a product of\\nper-component terms, each depending on one y_i only — the factorization\\nidentity holds by algebra, and the constructor verifies it by enumeration\\nto 1e-12 before returning the spec (any violation is a bug, not a\\ntolerance). The per-component channels and priors are drawn from a seeded generator, so\\na single u64 reproduces an entire world. The construction is capped at n = 4 neurons (16 latents, 16 stimuli); it exists to exercise the\\nper-neuron machinery exactly, not to be large. These worlds feed both the factorized-filter tests and the spiking\\nexperiments of the next chapter, where the same EnvironmentSpec JSON files are accepted by the command line.","breadcrumbs":"Synthetic worlds » Exactly factorizable worlds","id":"17","title":"Exactly factorizable worlds"},"18":{"body":"The final rung replaces probabilities-by-fiat with spikes. Each neuron in\\nthe spiking module is a discrete-time approximation of a Poisson unit:\\nat every step of size dt it holds a log-probability state log p(y_i = 1 | x_{1:t}) and emits a spike with the corresponding\\nprobability, clamped into a firing-rate band [r_min, r_max] Hz. A time step performs three operations, in order: Update. Add the learned per-stimulus weight: log_p += log_alpha[x]. If log_alpha[x] equals the true log\\nlikelihood-ratio log( g_i(x,1) / g_i(x,0) ) of the world’s factorized\\nemission, this is the per-neuron Bayesian filter of the filtering chapter — the membrane accumulates evidence in\\nlog-odds. Squash. Contract toward the prior and clamp: log_p ← prior + γ·(log_p − prior), then clip into [log(r_min·dt), log(r_max·dt)]. The contraction (γ slightly below 1) is\\nthe forgetting that keeps an unbounded evidence sum from saturating the\\nunit forever; the clamps enforce the physiological rate band; the prior —\\nthe log of prior_rate·dt — is the exact fixed point of the map, so a\\nneuron receiving no evidence sits at its spontaneous rate. Optimize. The chase game, one more time, now against a linear\\nlateral predictor: q_i = (w_i · y_-i + b_i)·dt, a weighted sum of the\\nother neurons’ current spikes — the natural spiking analogue of the\\nmean-field chapter’s tabular predictor. The predictor descends toward the\\nneuron’s spike probability, and the stimulus weight moves along the\\nlog-ratio: log_alpha[x] += η · gate · log( p / q ). The gate is the previous step’s spike probability — or, with spike_gated, the previous\\nspike bit itself, the one-sample estimate of that probability which is all\\na real synapse could observe. The two gates agree in expectation, which the\\nacceptance suite confirms by direct Monte Carlo comparison. All randomness is per-neuron counter-based streams derived from one seed,\\nso runs are byte-reproducible.","breadcrumbs":"The spiking network » The spiking network","id":"18","title":"The spiking network"},"19":{"body":"#![allow(unused)] fn main() {\\nuse infomax::env::build_factorized_env;\\nuse infomax::spiking::{train, SpikingNetwork, SpikingNetworkConfig, SpikingTrainConfig}; let world = build_factorized_env(2, 20, 7).unwrap();\\nlet net_cfg: SpikingNetworkConfig = serde_json::from_str(r#\\"{\\"n\\": 2, \\"nx\\": 4, \\"seed\\": 0}\\"#).unwrap();\\nlet mut net = SpikingNetwork::new(net_cfg).unwrap();\\nlet train_cfg = SpikingTrainConfig { events: 400, log_every: 100, env_seed: 1 };\\nlet log = train(&mut net, &world, &train_cfg).unwrap();\\n// mean rates stay inside the configured band, here [0.5, 100] Hz\\nlet rate = log.last(\\"mean_rate_hz\\").unwrap();\\nassert!((0.5..=100.0).contains(&rate)); } Progress is scored by the plug-in mutual information between the event’s\\nlatent and the vector of per-neuron spike counts, estimated over a sliding\\nwindow of events. The learner never sees this number; it is computed from\\nlogged (z, counts) pairs alone.","breadcrumbs":"The spiking network » Running it","id":"19","title":"Running it"},"2":{"body":"Every stochastic routine takes an explicit seed and uses counter-based\\ngenerators ( ChaCha8), so identical configurations produce byte-identical\\nCSV logs; floats are printed with 17 significant digits, enough to\\nround-trip every f64 exactly.","breadcrumbs":"Introduction » Reproducibility","id":"2","title":"Reproducibility"},"20":{"body":"Two empirical facts about these dynamics are worth knowing before tuning: The informative scale is transient. The log-ratio rule has no\\nbuilt-in scale anchor: once log_alpha is aligned with the true\\nlog likelihood-ratios, continued training keeps inflating its magnitude,\\nand the neuron degenerates from an evidence accumulator into a\\nsingle-stimulus detector (first informative stimulus pins the rate to a\\nclamp). Plug-in MI rises, peaks while the learned ratios are near the\\ntrue scale, then recedes toward the detector value. Strong evidence forgives. When individual stimuli are highly\\ndiagnostic of the latent, the detector attractor is nearly as informative\\nas the exact filter, and long training is robustly good. The default\\nexperiment world is of this kind; the acceptance test requires the\\ntrained network to reach at least 60% of the MI of a reference network\\nwhose log_alpha is set to the true log-ratios, and it does so with\\nmargin. The predictor’s learning rate deserves one note: the update Δb = η_w · err · dt targets a quantity q = b·dt that already carries a\\nfactor of dt, so the effective rate scales as η_w · dt². With dt = 1 ms that is six orders of magnitude of attenuation — hence the\\ndefault eta_w = 50 000, which is not a typo.","breadcrumbs":"The spiking network » What training actually does","id":"20","title":"What training actually does"},"21":{"body":"The infomax binary exposes each module as a seeded, reproducible\\nexperiment. Every run writes per-step metrics as CSV plus a JSON summary\\nthat echoes the fully resolved configuration, so a result can always be\\ntraced back to the exact settings that produced it. infomax <SUBCOMMAND> [--config PATH] [--seed U64] [--out DIR] [--trials N] [--csv | --no-csv]","breadcrumbs":"The command-line interface » The command-line interface","id":"21","title":"The command-line interface"},"22":{"body":"Subcommand What it runs run-chase the two-player chase game on a single softmax code run-meanfield the factorized population with lateral predictors run-filter recursive Bayesian filtering over sampled events run-spiking spiking-network training on an event stream validate the built-in cross-check suite (one pass/fail line each) capacity the brute-force capacity oracle for a {px, ny} problem run-chase and run-meanfield additionally accept --steps N as a\\nshortcut override of the config’s step budget; capacity takes its problem\\nfile via --env (with --config as an alias); validate takes only --seed.","breadcrumbs":"The command-line interface » Subcommands","id":"22","title":"Subcommands"},"23":{"body":"--config PATH — JSON configuration. Every field has a documented\\ndefault, so {} (or omitting the flag entirely) is a valid\\nconfiguration; unknown keys are rejected, so a typo fails the run\\ninstead of silently using a default. --seed U64 — overrides the config’s seed. --out DIR — output directory, created if absent (default out). --trials N — runs N independent trials with seeds seed, seed+1, …, seed+N−1 in parallel; the summary aggregates all of\\nthem. --csv / --no-csv — whether to write the per-step metric files. The\\nsummary JSON is always written.","breadcrumbs":"The command-line interface » Common flags","id":"23","title":"Common flags"},"24":{"body":"For a subcommand named <name>, each trial writes <name>_seed<SEED>.csv and the run writes one <name>_summary.json\\ncontaining the command line, the fully resolved configuration (defaults\\nfilled in, overrides applied), per-trial final metrics, and the elapsed\\nwall time. CSV floats are printed with 17 significant digits — enough that parsing the\\ntext recovers the exact f64, bit for bit. Identical configuration and\\nseed produce byte-identical CSV files; this is enforced by test and is\\nthe backbone of reproducibility here. For example: infomax run-chase --steps 2000 --seed 42 --out a\\ninfomax run-chase --steps 2000 --seed 42 --out b\\ncmp a/chase_seed42.csv b/chase_seed42.csv # identical","breadcrumbs":"The command-line interface » Outputs","id":"24","title":"Outputs"},"25":{"body":"Code Meaning 0 success 1 configuration error (bad flag, unknown key, invalid value) 2 numerical abort (non-finite metric, zero mass, degenerate marginal) The distinction matters in scripts: exit 1 means fix your input, exit 2\\nmeans the run itself went numerically wrong and the partial outputs\\nshould be treated with suspicion. Log verbosity is controlled by the environment variable INFOMAX_LOG_LEVEL, one of error, info, debug (default error). An\\nunrecognized value prints a warning and falls back to error rather than\\nfailing the run.","breadcrumbs":"The command-line interface » Exit codes and logging","id":"25","title":"Exit codes and logging"},"26":{"body":"cat > world.json <<\'EOF\'\\n{\\"latent_prior\\": [0.5, 0.5], \\"emission\\": [[0.45, 0.45, 0.05, 0.05], [0.05, 0.05, 0.45, 0.45]], \\"event_len\\": 20}\\nEOF cat > run.json <<\'EOF\'\\n{\\"env_path\\": \\"world.json\\", \\"network\\": {\\"n\\": 2, \\"nx\\": 4, \\"seed\\": 0}, \\"train\\": {\\"events\\": 12000, \\"log_every\\": 2000, \\"env_seed\\": 1}}\\nEOF INFOMAX_LOG_LEVEL=info infomax run-spiking --config run.json --out results If env_path is omitted, run-spiking and run-filter generate an\\nexactly factorizable world (see Synthetic worlds) from\\nthe config’s n and event_len. The network’s stimulus alphabet nx must\\nmatch the world’s — a mismatch is a configuration error, caught before any\\ntraining happens.","breadcrumbs":"The command-line interface » Example: a spiking experiment from a world file","id":"26","title":"Example: a spiking experiment from a world file"},"27":{"body":"infomax validate runs the crate’s internal cross-checks — the variation\\nformula against finite differences, recursive-versus-batch filtering,\\ncapacity-oracle bounds, spiking rate bounds, and so on — printing one ok/ FAILED line per check and exiting nonzero if any fail. It is a quick\\nsmoke test that an installed binary computes what this book claims.","breadcrumbs":"The command-line interface » The validate subcommand","id":"27","title":"The validate subcommand"},"3":{"body":"Everything in this crate is grounded in exact, finite-alphabet probability.\\nThe prob module supplies the ground truth that every learning rule is\\nlater measured against; the simplex module supplies the parameterization\\nthat keeps gradient updates from ever producing an invalid distribution.","breadcrumbs":"The probability toolkit » The probability toolkit","id":"3","title":"The probability toolkit"},"4":{"body":"A FiniteDistribution is a validated probability vector over {0, .., K-1}: entries must be finite, nonnegative, and sum to one within NORM_TOL = 1e-12. Construction checks rather than repairs — a vector\\nthat does not already normalize is an error, not something to silently fix,\\nbecause silent renormalization is exactly how numerical drift hides. When\\nyou genuinely have unnormalized weights, from_weights divides through\\nexplicitly. A ConditionalTable is a stack of such rows, one per input symbol: a\\nchannel p(y|x). Entropy, the output marginal p(y) = Σ_x p(x) p(y|x),\\nand the mutual information I(x; y) = H(y) − H(y|x) (in nats) are computed by direct summation. Logs are evaluated on max(p, EPS) with EPS = 1e-9, so interior-point formulas never see −∞. #![allow(unused)] fn main() {\\nuse infomax::prob::{FiniteDistribution, entropy}; let d = FiniteDistribution::uniform(2);\\nassert!((entropy(&d) - std::f64::consts::LN_2).abs() < 1e-12); }","breadcrumbs":"The probability toolkit » Distributions and channels","id":"4","title":"Distributions and channels"},"5":{"body":"The learning rules in later chapters are all, at bottom, ascent along the\\nfirst variation of I with respect to the channel. For a balanced\\nperturbation δp(y|x) (each row of deltas sums to zero, so the perturbed\\ntable is still a channel to first order), δI = Σ_x p(x) Σ_y log( p(y|x) / p(y) ) · δp(y|x). mi_variation evaluates this closed form; the validate module and the\\nproperty-test suite confirm it against central finite differences of the\\nexact mutual_information on random instances. The striking feature of the\\nformula is what it contains: the only global quantity is the output\\nmarginal p(y). Replace that one term with something locally learnable and\\nthe whole gradient becomes local — which is precisely the move the next\\nchapter makes.","breadcrumbs":"The probability toolkit » The first variation of mutual information","id":"5","title":"The first variation of mutual information"},"6":{"body":"capacity_oracle maximizes I(x; y) over all channels with a given input\\ndistribution and output alphabet size, by grid refinement with mass-moving\\nhill climbing. It is deliberately slow and deliberately independent of the\\nlearning code: its only job is to provide an upper target that the chase\\ngame and the mean-field population can be shown to approach. For small\\nproblems the optimum is known in closed form — a uniform binary input\\nthrough a clean binary channel reaches ln 2 — and the oracle’s agreement\\nwith such cases is pinned in the tests.","breadcrumbs":"The probability toolkit » A brute-force capacity oracle","id":"6","title":"A brute-force capacity oracle"},"7":{"body":"Gradient steps on raw probabilities can leave the simplex; projected\\ngradient steps can mask sign errors. The simplex module sidesteps both by\\nparameterizing every trainable distribution with unconstrained scores\\nmapped through a softmax. score_gradient converts a gradient in\\nprobability space into score space, and realized_direction reports the\\nprobability-space displacement a score step actually produced — useful in\\ntests that need to verify an update moved the distribution the way the\\nvariation formula predicted. The round trip scores_from_probs → softmax\\nrecovers probabilities to 1e-12, a property-test invariant.","breadcrumbs":"The probability toolkit » Scores and the simplex","id":"7","title":"Scores and the simplex"},"8":{"body":"The first variation of mutual information, δI = Σ_x p(x) Σ_y log( p(y|x) / p(y) ) · δp(y|x), contains exactly one non-local term: the output marginal p(y). The chase\\ngame replaces it with a trainable auxiliary distribution q(y) and turns\\nMI maximization into a two-player pursuit: The chaser. On each sampled stimulus x, the auxiliary descends the\\nsquared distance to the code’s current row: q ← q − η_q (q − p(·|x)). Averaged over stimuli, its fixed point is the\\ntrue marginal p(y) = E_x[p(y|x)] — the chaser is an online estimator\\nof the one global quantity the gradient needs. The code. The sampled row ascends the surrogate gradient log( p(y|x) / q(y) ), i.e. the variation formula with q standing in\\nfor p(y). While q tracks the marginal well, this is ascent on I\\nitself. Two details make this work reliably. Two timescales. The substitution is only valid if q stays close to\\nthe marginal of the current code, which is itself moving. So the chaser\\nmust move faster than the thing it chases: the configuration requires eta_q > eta_p, and ChaseConfig::validate rejects anything else. With\\nthe ordering reversed, the code ascends against a stale marginal and the\\ndynamics can orbit instead of climb. Score parameterization. Both players live on softmax scores\\n(see the probability toolkit), so no step — however large\\nthe log-ratio — can push a distribution off the simplex. Rows stay exactly\\nstochastic after any number of updates, a property-test invariant.","breadcrumbs":"The chase game » The chase game","id":"8","title":"The chase game"},"9":{"body":"#![allow(unused)] fn main() {\\nuse infomax::chase::{run_chase, ChaseConfig};\\nuse infomax::prob::FiniteDistribution; let px = FiniteDistribution::uniform(2);\\nlet cfg = ChaseConfig { ny: 2, steps: 20_000, seed: 1, ..ChaseConfig::default() };\\nlet log = run_chase(&px, &cfg).unwrap();\\n// a 2x2 code on uniform input heads for the ln 2 = 0.693.. capacity\\nassert!(log.last(\\"mi_nats\\").unwrap() > 0.6);\\nassert!(log.last(\\"q_gap_max\\").unwrap() < 0.25); } The training log records, per logging interval: mi_nats — the exact mutual information of the current code, computed\\nwith the ground-truth tools from prob (the learner itself never sees\\nthis number); q_gap_max — the max-norm distance between q and the exact marginal of\\nthe current code, i.e. how well the chaser is doing its one job; the two learning rates, echoed for traceability. The residual q_gap_max fluctuates at a scale set by eta_q, because each\\nupdate yanks q toward a single sampled row rather than the average; it\\nshrinks, but does not vanish, as training proceeds. Freezing the code\\nisolates the chaser: frozen_code_best_gap runs q alone against a fixed\\ncode and reports the closest max-norm approach to the exact marginal along\\nthe trajectory, which is how the tests pin down the chaser’s tracking\\naccuracy independently of the code’s motion. At the expected fixed point — code at an information maximum, q on the\\nmarginal — the surrogate gradient’s row averages vanish, which the validate subcommand checks on a known-capacity instance.","breadcrumbs":"The chase game » Running it","id":"9","title":"Running it"}},"length":28,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{".":{"0":{"5":{"df":1,"docs":{"26":{"tf":2.0}}},"df":0,"docs":{}},"1":{"df":1,"docs":{"1":{"tf":1.0}}},"2":{"5":{"df":1,"docs":{"9":{"tf":1.0}}},"df":2,"docs":{"12":{"tf":1.0},"14":{"tf":1.0}}},"3":{"6":{"8":{"0":{"6":{"4":{"2":{"0":{"7":{"1":{"6":{"8":{"4":{"9":{"7":{"1":{")":{".":{"a":{"b":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"5":{"df":1,"docs":{"26":{"tf":2.0}}},"df":0,"docs":{}},"5":{"6":{"2":{"3":{"3":{"5":{"1":{"4":{"4":{"6":{"1":{"8":{"8":{"0":{"8":{"3":{")":{".":{"a":{"b":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"19":{"tf":1.0},"26":{"tf":1.4142135623730951}}},"6":{"9":{"3":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"9":{"tf":1.0}}},"7":{"5":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"8":{"df":1,"docs":{"14":{"tf":1.0}}},"9":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"df":2,"docs":{"12":{"tf":1.0},"20":{"tf":1.0}}},"df":0,"docs":{}},"df":6,"docs":{"10":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}},"}":{"\\"":{"#":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"1":{".":{"3":{"8":{"6":{"3":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}},"^":{"4":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"1":{"tf":1.0},"16":{"tf":1.4142135623730951}}},"2":{"0":{"0":{"0":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":6,"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"6":{"df":1,"docs":{"17":{"tf":1.4142135623730951}}},"7":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}},"df":11,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":6,"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.7320508075688772},"7":{"tf":1.0}}}},"2":{"0":{"0":{"0":{"df":2,"docs":{"24":{"tf":1.4142135623730951},"26":{"tf":1.0}}},"df":1,"docs":{"12":{"tf":1.0}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"19":{"tf":1.0},"26":{"tf":1.0}}},"^":{"df":0,"docs":{},"n":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":7,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"x":{"2":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"×":{"2":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"θ":{"(":{"1":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"i":{"(":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"θ":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"3":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"0":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"2":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":5,"docs":{"12":{"tf":2.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"26":{"tf":1.0}}},"5":{"0":{"df":1,"docs":{"20":{"tf":1.0}}},"df":1,"docs":{"16":{"tf":1.0}}},"6":{"0":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"7":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"1":{"tf":1.0}}},"9":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}},"_":{"df":0,"docs":{},"i":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}}},"q":{"df":1,"docs":{"8":{"tf":1.0}}},"w":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"x":{"df":4,"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}},"y":{"df":2,"docs":{"5":{"tf":1.0},"8":{"tf":1.0}}}},"a":{"/":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"4":{"2":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":6,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":5,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"d":{"df":3,"docs":{"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"18":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}}},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"i":{"a":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":7,"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"g":{"df":3,"docs":{"18":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"h":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":2,"docs":{"20":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"w":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":2,"docs":{"12":{"tf":1.0},"18":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"6":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":4,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"df":0,"docs":{},"t":{"df":2,"docs":{"5":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"0":{".":{"5":{".":{".":{"=":{"1":{"0":{"0":{".":{"0":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"y":{"(":{"&":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"x":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"m":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{".":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"(":{"\\"":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"i":{"_":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"q":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"i":{".":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"x":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"|":{"&":{"df":0,"docs":{},"x":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"z":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"14":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":1,"docs":{"20":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}}}},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"b":{")":{".":{"a":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"4":{"2":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"i":{")":{"df":0,"docs":{},"·":{"d":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"k":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":2,"docs":{"21":{"tf":1.0},"25":{"tf":1.0}}}},"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}}}}}}}}}}},"df":2,"docs":{"14":{"tf":1.7320508075688772},"27":{"tf":1.0}}}},"df":0,"docs":{}},"y":{"df":1,"docs":{"14":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":3,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":4,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":1,"docs":{"13":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"18":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":9,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"t":{"df":5,"docs":{"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.4142135623730951}}}},"l":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"27":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"17":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"27":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.4142135623730951}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"22":{"tf":1.0}}}}}},"s":{"c":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"22":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"17":{"tf":1.0}}},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"(":{"2":{"df":2,"docs":{"16":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":4,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}}}}},"·":{"d":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"c":{"_":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"a":{"c":{"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.7320508075688772},"27":{"tf":1.0},"9":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":2,"docs":{"11":{"tf":1.0},"17":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"1":{"tf":1.0}}}},"l":{"df":0,"docs":{},"o":{"df":1,"docs":{"18":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":1,"docs":{"26":{"tf":1.4142135623730951}}},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}},"s":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"f":{"df":0,"docs":{},"g":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":3,"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"9":{"tf":1.0}}}},"h":{"a":{"c":{"df":0,"docs":{},"h":{"a":{"8":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":6,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":8,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"5":{"tf":1.4142135623730951}},"’":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":2,"docs":{"1":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}}}}},"df":9,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.7320508075688772},"24":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.4142135623730951}},"r":{"df":3,"docs":{"0":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"’":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":8,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.4142135623730951},"4":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"12":{"tf":1.0},"27":{"tf":1.0}}}},"m":{"df":0,"docs":{},"p":{"df":2,"docs":{"18":{"tf":1.7320508075688772},"20":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"b":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"p":{"df":1,"docs":{"18":{"tf":1.0}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"24":{"tf":1.0}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":10,"docs":{"0":{"tf":2.449489742783178},"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":2.449489742783178}},"’":{"df":3,"docs":{"0":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.4142135623730951}}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":2.23606797749979}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":9,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}}}}},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"9":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":2,"docs":{"1":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":4,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":8,"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0}}}},"’":{"df":3,"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}}}},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"18":{"tf":1.0},"5":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"14":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"24":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":2,"docs":{"0":{"tf":1.0},"20":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"18":{"tf":1.0},"2":{"tf":1.0}}}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0}},"’":{"df":2,"docs":{"1":{"tf":1.0},"27":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"22":{"tf":1.0},"27":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":4,"docs":{"2":{"tf":1.0},"21":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"4":{"tf":1.0}},"e":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}},"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":5,"docs":{"12":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"25":{"tf":1.0}}}}}},"df":0,"docs":{}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.0},"25":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"t":{"a":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"15":{"tf":1.0},"17":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"18":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.7320508075688772}}}}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"i":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"27":{"tf":1.0},"5":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}}}},"r":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"4":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"15":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"df":0,"docs":{},"k":{"df":1,"docs":{"16":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"a":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":3,"docs":{"12":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":5,"docs":{"16":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"c":{"df":1,"docs":{"1":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.0}}}}}}}},"df":1,"docs":{"9":{"tf":1.0}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"t":{"df":2,"docs":{"18":{"tf":1.0},"20":{"tf":2.0}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"13":{"tf":1.0}}}}},"y":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"x":{"[":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"y":{"df":0,"docs":{},"|":{"df":0,"docs":{},"x":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"h":{"df":14,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":2,"docs":{"21":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.0}}}},"t":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"n":{"d":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}}}},"u":{"df":0,"docs":{},"m":{"_":{"c":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.4142135623730951},"17":{"tf":1.0}}}}}},"v":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"19":{"tf":1.0},"26":{"tf":1.0}}}}},"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}}}}}}},"o":{"df":0,"docs":{},"f":{"df":1,"docs":{"26":{"tf":2.0}}}},"p":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":4,"docs":{"25":{"tf":2.0},"26":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}}}}}},"t":{"a":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}},"q":{"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}}},"w":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":3,"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}},"df":8,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"26":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"16":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"’":{"df":1,"docs":{"19":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"11":{"tf":1.0},"3":{"tf":1.0}}}}}}},"i":{"d":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.7320508075688772}},"l":{"df":0,"docs":{},"i":{"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"t":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"27":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}}}}},"f":{"(":{"df":0,"docs":{},"x":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.0}}}},"6":{"4":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":10,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.449489742783178},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"i":{"df":0,"docs":{},"z":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}},"e":{"d":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":3,"docs":{"23":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"r":{"df":1,"docs":{"13":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"w":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}}},"i":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":4,"docs":{"17":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}},"l":{"df":1,"docs":{"24":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"d":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":2,"docs":{"13":{"tf":1.0},"14":{"tf":1.0}}},"df":0,"docs":{}}}},"df":10,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0}}}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"e":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"2":{"5":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"(":{"2":{"df":4,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}},"4":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}},"x":{"df":5,"docs":{"18":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"1":{"tf":1.0}}}},"o":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"n":{"df":7,"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"r":{"c":{"df":2,"docs":{"0":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"18":{"tf":1.0}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}},"m":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":5,"docs":{"27":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"z":{"df":1,"docs":{"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"_":{"c":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"_":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"21":{"tf":1.0},"24":{"tf":1.0}}}}}}},"g":{"_":{"df":0,"docs":{},"i":{"(":{"df":0,"docs":{},"x":{",":{"0":{"df":1,"docs":{"18":{"tf":1.0}}},"1":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"15":{"tf":1.7320508075688772},"17":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}},"p":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.7320508075688772}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"5":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"’":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"12":{"tf":1.0},"3":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}}}}}},"h":{"(":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}},"y":{"df":0,"docs":{},"|":{"df":0,"docs":{},"x":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"c":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"20":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":4,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":4,"docs":{"13":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}}}}}}}}},"z":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.0}}}},"i":{"(":{"df":0,"docs":{},"x":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0}}}},".":{"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"i":{".":{"d":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}}}}}},"n":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":6,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"17":{"tf":1.4142135623730951},"23":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":1,"docs":{"25":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"x":{":":{":":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":2,"docs":{"1":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{":":{":":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"{":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"{":{"b":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}},"{":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"=":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}},"df":4,"docs":{"21":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"df":7,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":5,"docs":{"12":{"tf":1.4142135623730951},"25":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"0":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}},"n":{"c":{"df":2,"docs":{"5":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"d":{"df":3,"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}},"n":{"df":1,"docs":{"27":{"tf":1.0}}},"v":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"25":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"12":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":5,"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}},"’":{"df":2,"docs":{"11":{"tf":1.0},"17":{"tf":1.0}}}},"j":{"a":{"c":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"b":{"df":2,"docs":{"6":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"17":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951}}}}}},"k":{"df":2,"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":5,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}}}},"y":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"n":{"df":2,"docs":{"6":{"tf":1.0},"9":{"tf":1.0}}}}}}},"l":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}},"a":{"d":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"17":{"tf":1.0},"8":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"26":{"tf":1.0}}}}}}}},"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}},"r":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}}},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"df":10,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}}}},"v":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"d":{"df":6,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.0},"18":{"tf":1.0},"20":{"tf":1.0}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"s":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":5,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}},"n":{"df":3,"docs":{"12":{"tf":1.7320508075688772},"6":{"tf":1.0},"9":{"tf":1.0}}},"o":{"c":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"y":{"df":0,"docs":{},"|":{"df":0,"docs":{},"x":{")":{"/":{"df":0,"docs":{},"q":{"(":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"r":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":0,"docs":{},"·":{"d":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"·":{"d":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"(":{"\\"":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"(":{"\\"":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"z":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"_":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"a":{"[":{"df":0,"docs":{},"x":{"df":1,"docs":{"18":{"tf":1.7320508075688772}}}},"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"19":{"tf":1.0},"26":{"tf":1.0}}}}}}},"p":{"df":1,"docs":{"18":{"tf":1.7320508075688772}}}},"df":16,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":2.0},"18":{"tf":2.8284271247461903},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"25":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.7320508075688772}},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"11":{"tf":2.0}}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.0}}}},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"n":{"df":7,"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"k":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}},"p":{"df":2,"docs":{"18":{"tf":1.0},"7":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":9,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":2.23606797749979},"9":{"tf":1.7320508075688772}}}}}},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}},"s":{"df":2,"docs":{"25":{"tf":1.0},"6":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}}}}},"x":{"(":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":1,"docs":{"9":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":7,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.7320508075688772},"6":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.4142135623730951}}}}}}}},"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"22":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"m":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":2,"docs":{"15":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":4,"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"_":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":5,"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"8":{"tf":1.0}},"s":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"o":{"d":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":5,"docs":{"18":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}},"s":{"df":1,"docs":{"20":{"tf":1.0}}},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"u":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"&":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}}}}}}},"df":6,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{">":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"<":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{">":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"24":{"tf":1.4142135623730951}}}},"t":{"df":3,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"18":{"tf":1.0}}}}}},"df":7,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"d":{"df":4,"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"t":{"_":{"c":{"df":0,"docs":{},"f":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"df":1,"docs":{"19":{"tf":1.4142135623730951}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":6,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"22":{"tf":1.0},"26":{"tf":1.0}},"’":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":9,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":2.0},"11":{"tf":2.8284271247461903},"12":{"tf":1.7320508075688772},"15":{"tf":2.6457513110645907},"17":{"tf":1.7320508075688772},"18":{"tf":2.23606797749979},"19":{"tf":1.0},"20":{"tf":1.0}},"’":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}}}},"x":{"df":0,"docs":{},"t":{"df":3,"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}},"n":{"df":3,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"4":{"tf":1.0}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":1,"docs":{"9":{"tf":1.4142135623730951}}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}},"h":{"df":1,"docs":{"0":{"tf":1.0}}}},"w":{"df":1,"docs":{"18":{"tf":1.0}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"19":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}}},"x":{"df":2,"docs":{"19":{"tf":1.0},"26":{"tf":1.4142135623730951}}},"y":{"df":2,"docs":{"22":{"tf":1.0},"9":{"tf":1.0}}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"18":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}},"d":{"d":{"df":3,"docs":{"11":{"tf":1.0},"15":{"tf":1.7320508075688772},"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"k":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"27":{"tf":1.0}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"26":{"tf":1.0}}}}},"n":{"c":{"df":2,"docs":{"14":{"tf":1.0},"20":{"tf":1.0}}},"df":18,"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"18":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"18":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":4,"docs":{"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"26":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":11,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"r":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"(":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":2.0}}},"x":{"df":5,"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"|":{"df":0,"docs":{},"z":{"df":2,"docs":{"14":{"tf":1.0},"16":{"tf":1.0}}}}},"y":{"_":{"df":0,"docs":{},"i":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{},"|":{"df":0,"docs":{},"x":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"8":{"tf":1.7320508075688772}}}}},"z":{"df":1,"docs":{"13":{"tf":1.0}}},"·":{"df":0,"docs":{},"|":{"df":0,"docs":{},"x":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"19":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"11":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}},"t":{"df":1,"docs":{"12":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"1":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":1,"docs":{"18":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"16":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}},"u":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}}}},"df":14,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":2.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.7320508075688772}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"b":{"df":2,"docs":{"11":{"tf":1.0},"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}},"h":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"20":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"u":{"df":1,"docs":{"21":{"tf":1.0}},"g":{"df":2,"docs":{"19":{"tf":1.0},"20":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"18":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"’":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":7,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":2.0},"15":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":2,"docs":{"13":{"tf":1.0},"14":{"tf":1.0}}}}}}}}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"18":{"tf":1.7320508075688772},"22":{"tf":1.0}},"’":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":3,"docs":{"11":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"·":{"d":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":4,"docs":{"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.0}}}},"v":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":2.449489742783178},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":2.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":2,"docs":{"22":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":7,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"t":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}},"t":{"df":0,"docs":{},"i":{"df":4,"docs":{"16":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"16":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"8":{"tf":1.0}}}}},"x":{"df":4,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}}}},"q":{"(":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"y":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"|":{"df":0,"docs":{},"y":{"_":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"i":{"(":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":2,"docs":{"11":{"tf":1.0},"18":{"tf":1.0}}}},"df":5,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":2.449489742783178},"9":{"tf":2.0}},"u":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"18":{"tf":1.0},"5":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"27":{"tf":1.0},"9":{"tf":1.0}}},"i":{"df":0,"docs":{},"o":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"20":{"tf":2.0},"8":{"tf":1.0}}}}},"w":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"20":{"tf":1.0},"6":{"tf":1.0}}}},"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"d":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"c":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"18":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":2,"docs":{"24":{"tf":1.0},"7":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":6,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"11":{"tf":1.0},"14":{"tf":1.0}},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"16":{"tf":1.0}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"13":{"tf":1.0},"4":{"tf":1.0}}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{},"l":{"a":{"c":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":5,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"v":{"df":2,"docs":{"21":{"tf":1.0},"24":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951}}}}}},"t":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"26":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"13":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"w":{"df":7,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":6,"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}},"n":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}}}},"_":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"(":{"3":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}},"p":{"df":0,"docs":{},"x":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"x":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":12,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":2.6457513110645907},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"25":{"tf":1.4142135623730951},"26":{"tf":1.7320508075688772},"27":{"tf":1.0},"9":{"tf":1.0}},"g":{"df":2,"docs":{"0":{"tf":1.7320508075688772},"18":{"tf":1.0}}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"20":{"tf":2.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":3,"docs":{"19":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"s":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"d":{"+":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}},"df":14,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":2.0},"24":{"tf":1.7320508075688772},"26":{"tf":1.0},"9":{"tf":1.0}}},"df":5,"docs":{"19":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"r":{"d":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"r":{"#":{"\\"":{"df":0,"docs":{},"{":{"\\"":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}},"t":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":1,"docs":{"7":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"x":{"df":4,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":7,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"df":1,"docs":{"18":{"tf":1.0}}},"x":{"df":1,"docs":{"20":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":2,"docs":{"18":{"tf":1.0},"6":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"6":{"tf":1.0}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":4,"docs":{"10":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"4":{"tf":1.0},"5":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"r":{"c":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"13":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}},"df":2,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"g":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":10,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.8284271247461903},"19":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"f":{"df":0,"docs":{},"g":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}}}}}},"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"t":{"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{".":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"(":{")":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"s":{"(":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"(":{"b":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":4,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0}}},"i":{"c":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"y":{"df":3,"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"d":{":":{":":{"df":0,"docs":{},"f":{"6":{"4":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"l":{"df":0,"docs":{},"n":{"_":{"2":{")":{".":{"a":{"b":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":10,"docs":{"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.0}},"’":{"df":1,"docs":{"18":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"5":{"tf":1.0}}}},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}},"u":{"df":13,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"26":{"tf":1.0},"8":{"tf":1.0}}}}}}},"o":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"df":5,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":1.0}}}}}},"df":0,"docs":{}}},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.0}}}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":2,"docs":{"4":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":4,"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}}}},"m":{"df":4,"docs":{"11":{"tf":1.0},"18":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.4142135623730951}}}},"t":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"y":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":3,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"n":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"5":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":3,"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"20":{"tf":1.0},"6":{"tf":1.0}}}}}}},"df":1,"docs":{"14":{"tf":1.0}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"11":{"tf":1.4142135623730951},"17":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":14,"docs":{"1":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"s":{"/":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"n":{"c":{".":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"8":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":5,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.0},"18":{"tf":1.7320508075688772},"24":{"tf":1.0}},"s":{"c":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.0}}}}}}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}},"k":{"df":3,"docs":{"12":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"(":{"&":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}},"_":{"c":{"df":0,"docs":{},"f":{"df":0,"docs":{},"g":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.7320508075688772},"22":{"tf":1.0},"26":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"p":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.0}}}},"u":{"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.7320508075688772},"8":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"o":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.0}}}}}},"u":{"6":{"4":{"df":3,"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"n":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0}},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}},"t":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.4142135623730951}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"13":{"tf":1.0},"4":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"p":{"d":{"a":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"s":{"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":9,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":2,"docs":{"20":{"tf":1.0},"25":{"tf":1.4142135623730951}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"27":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"1":{"df":1,"docs":{"1":{"tf":1.0}}},"2":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"8":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"19":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":3,"docs":{"11":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"u":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"i":{"a":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}}}},"w":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}},"y":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.7320508075688772},"4":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{},"k":{"df":2,"docs":{"13":{"tf":1.0},"8":{"tf":1.0}}},"l":{"d":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}}}},"df":7,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":2.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"26":{"tf":1.4142135623730951}},"’":{"df":3,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.0}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"x":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"^":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}},"_":{"1":{"df":1,"docs":{"13":{"tf":1.0}}},"2":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{},"{":{"1":{":":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0}},"s":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":2,"docs":{"14":{"tf":1.4142135623730951},"16":{"tf":1.0}}}},"y":{"_":{"df":2,"docs":{"11":{"tf":1.4142135623730951},"18":{"tf":1.0}},"i":{"df":2,"docs":{"15":{"tf":1.0},"17":{"tf":1.7320508075688772}}}},"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":5,"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"df":3,"docs":{"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":2,"docs":{"25":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}},"b":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"y":{"df":1,"docs":{"11":{"tf":1.0}}}}},"c":{"a":{"df":0,"docs":{},"p":{"a":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"d":{"df":0,"docs":{},"e":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":7,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":7,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":7,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":3,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":5,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":3,"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":4,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"22":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0}}}}}}}}},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":5,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"26":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"title":{"root":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}},"b":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"y":{"df":1,"docs":{"11":{"tf":1.0}}}}},"c":{"a":{"df":0,"docs":{},"p":{"a":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"10":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":3,"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":2,"docs":{"18":{"tf":1.0},"26":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"22":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));