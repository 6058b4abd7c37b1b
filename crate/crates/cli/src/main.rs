//! `syt`: build and query orders on standard Young tableaux.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use syt_core::kl::MAX_KL_N;
use syt_core::hopf::{pr_product, verify_product_interval};
use syt_core::orders::{
    ConventionChoice, OrderCache, OrderConfig, OrderKind, SandwichReport, KL_SMALL_N, MAX_N,
};
use syt_core::skew::{fixed_inner_poset, skew_order_poset, verify_skew_mobius};
use syt_core::verify::{self, Check};
use syt_core::{enumerate_skew_syt, enumerate_syt, Error, Partition, Poset, Tableau};

#[derive(Parser)]
#[command(name = "syt", version, about = "Weak, KL and chain orders on standard Young tableaux")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Admit the expensive sizes (kl at n = 7, anything at n = 8).
    #[arg(long, global = true)]
    allow_big: bool,
    /// Directory for cached KL tables.
    #[arg(long, global = true, value_name = "PATH")]
    kl_cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Convention::Auto)]
    kl_descent_convention: Convention,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Left,
    Right,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Weak,
    Kl,
    Chain,
    Geom,
}

impl Order {
    fn kind(self) -> Option<OrderKind> {
        match self {
            Order::Weak => Some(OrderKind::Weak),
            Order::Kl => Some(OrderKind::Kl),
            Order::Chain => Some(OrderKind::Chain),
            Order::Geom => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List standard tableaux of size n (skew when --mu is given).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// Build an order and print its size or export it.
    Order(OrderArgs),
    /// Möbius value of an interval (default: the whole poset).
    Mobius {
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        from: Option<Tableau>,
        #[arg(long)]
        to: Option<Tableau>,
    },
    /// Elements of the interval [LOW, HIGH].
    Interval {
        #[command(flatten)]
        order: OrderArgs,
        low: Tableau,
        high: Tableau,
    },
    /// Product of two plactic classes.
    Product {
        left: Tableau,
        right: Tableau,
        #[arg(long, visible_alias = "type", value_enum, default_value_t = Order::Weak)]
        order: Order,
        /// Compare the product with the interval [T/S, T\S].
        #[arg(long)]
        verify_interval: bool,
    },
    /// Poset of skew tableaux with inner shape --mu.
    Skew {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Order::Kl)]
        base: Order,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Export an order as DOT or JSON.
    Export {
        #[arg(long, visible_alias = "type", value_enum, default_value_t = Order::Weak)]
        order: Order,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Args, Clone)]
struct OrderArgs {
    #[arg(long, visible_alias = "type", value_enum, default_value_t = Order::Weak)]
    order: Order,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    export: Option<Format>,
}

#[derive(Subcommand)]
enum Suite {
    /// Products against intervals for all sizes up to --n.
    TheoremPr {
        #[arg(long, value_enum)]
        order: Option<Order>,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Möbius value of the whole poset.
    MobiusTop {
        #[arg(long, value_enum)]
        order: Option<Order>,
        #[arg(long)]
        n: usize,
    },
    /// Möbius values of skew posets.
    SkewMobius {
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        base: Option<Order>,
    },
    /// Inclusions weak within kl within chain.
    Sandwich {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Descent, shape, transpose and evacuation maps.
    Morphisms {
        #[arg(long, value_enum)]
        order: Option<Order>,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Known small counterexamples.
    Counterexamples,
}

/// Failure modes mapped to exit codes 1 and 2.
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::UnknownLabel(_)
            | Error::LimitExceeded(_)
            | Error::InvalidTableau(_)
            | Error::SizeMismatch(..)
            | Error::BadRange(..)
            | Error::NotComparable(..)
            | Error::InnerTranslationUnsupported(_) => Failure::Usage(e.to_string()),
            other => Failure::Failed(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

struct App {
    cache: OrderCache,
    allow_big: bool,
    json: bool,
}

impl App {
    /// Refuses big runs without the flag and prints a cost estimate for them.
    fn guard(&self, kind: OrderKind, n: usize) -> Result<(), Failure> {
        let hard = if kind == OrderKind::Kl { MAX_KL_N } else { MAX_N };
        if n == 0 || n > hard {
            self.cache.check_limits(kind, n)?;
        }
        let big = n >= MAX_N || (kind == OrderKind::Kl && n > KL_SMALL_N);
        if !big {
            return Ok(());
        }
        if !self.allow_big {
            return Err(Failure::Usage(format!("{kind} order at n = {n} needs --allow-big")));
        }
        let perms: usize = (1..=n).product();
        let estimate = match kind {
            OrderKind::Kl => format!(
                "KL table on {perms} permutations, {} polynomial slots",
                perms * perms
            ),
            _ => format!("{perms} permutations, all pairs of standard tableaux"),
        };
        eprintln!("estimate: {estimate}");
        Ok(())
    }

    fn order(&self, kind: OrderKind, n: usize) -> Result<std::sync::Arc<syt_core::orders::TableauPoset>, Failure> {
        self.guard(kind, n)?;
        Ok(self.cache.order(kind, n)?)
    }

    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{value}");
        } else {
            print!("{}", text());
        }
    }

    fn report(&self, checks: &[Check]) -> Outcome {
        let passed = verify::all_passed(checks);
        self.emit(json!({ "passed": passed, "checks": checks }), || {
            checks
                .iter()
                .map(|c| {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    if c.detail.is_empty() {
                        format!("{mark} {}\n", c.name)
                    } else {
                        format!("{mark} {}: {}\n", c.name, c.detail)
                    }
                })
                .collect()
        });
        Ok(passed)
    }

    fn export(&self, poset: &Poset, format: Format) {
        match format {
            Format::Dot => print!("{}", poset.to_dot()),
            Format::Json => println!("{}", poset.to_json()),
        }
    }

    fn kinds(order: Option<Order>) -> Result<Vec<OrderKind>, Failure> {
        match order {
            None => Ok(OrderKind::ALL.to_vec()),
            Some(o) => o.kind().map(|k| vec![k]).ok_or_else(geom_usage),
        }
    }

    fn run(&self, command: Command) -> Outcome {
        match command {
            Command::Enumerate { n, mu } => {
                let list = match mu {
                    Some(mu) => enumerate_skew_syt(&mu, n),
                    None => enumerate_syt(n),
                };
                let labels: Vec<String> = list.iter().map(|t| t.to_string()).collect();
                self.emit(json!(labels), || labels.iter().map(|l| format!("{l}\n")).collect());
                Ok(true)
            }
            Command::Order(args) => self.order_cmd(&args),
            Command::Export { order, n, format } => {
                self.order_cmd(&OrderArgs { order, n, export: Some(format) })
            }
            Command::Mobius { order, from, to } => {
                let kind = order.order.kind().ok_or_else(geom_usage)?;
                let tp = self.order(kind, order.n)?;
                let (b, t) = tp.poset().bounds()?;
                let low = from.map(|x| tp.idx(&x)).transpose()?.unwrap_or(b);
                let high = to.map(|x| tp.idx(&x)).transpose()?.unwrap_or(t);
                let mu = tp.poset().mobius_idx(low, high)?;
                let (l, h) = (tp.tableau(low).to_string(), tp.tableau(high).to_string());
                self.emit(
                    json!({ "order": kind.name(), "n": order.n, "low": l, "high": h, "mobius": mu }),
                    || format!("mu([{l}], [{h}]) = {mu} in {kind} order on SYT_{}\n", order.n),
                );
                Ok(true)
            }
            Command::Interval { order, low, high } => {
                let kind = order.order.kind().ok_or_else(geom_usage)?;
                let tp = self.order(kind, order.n)?;
                let members = tp.poset().interval_members(tp.idx(&low)?, tp.idx(&high)?)?;
                let interval = tp.poset().induced(&members);
                if let Some(format) = order.export {
                    self.export(&interval, format);
                } else {
                    let mut labels: Vec<String> = interval.labels().to_vec();
                    labels.sort();
                    let mu = interval.mobius_bottom_top()?;
                    self.emit(json!({ "elements": labels, "mobius": mu }), || {
                        let mut s: String = labels.iter().map(|l| format!("{l}\n")).collect();
                        s.push_str(&format!("{} elements, mu = {mu}\n", labels.len()));
                        s
                    });
                }
                Ok(true)
            }
            Command::Product { left, right, order, verify_interval } => {
                let product = pr_product(&left, &right)?;
                let terms: Vec<String> = product.tableaux().iter().map(|t| t.to_string()).collect();
                if !verify_interval {
                    self.emit(json!({ "terms": terms }), || format!("{product}\n"));
                    return Ok(true);
                }
                let kind = order.kind().ok_or_else(geom_usage)?;
                let tp = self.order(kind, left.n() + right.n())?;
                let check = verify_product_interval(&tp, &left, &right)?;
                let show = |v: &[Tableau]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>();
                self.emit(
                    json!({
                        "terms": terms,
                        "order": kind.name(),
                        "low": check.low.to_string(),
                        "high": check.high.to_string(),
                        "holds": check.holds(),
                        "missing": show(&check.missing),
                        "extra": show(&check.extra),
                    }),
                    || {
                        let mut s = format!("{product}\n");
                        s.push_str(&format!(
                            "interval [{}, {}] in {kind} order: {}\n",
                            check.low,
                            check.high,
                            if check.holds() { "equal" } else { "different" }
                        ));
                        for t in &check.missing {
                            s.push_str(&format!("  only in interval: {t}\n"));
                        }
                        for t in &check.extra {
                            s.push_str(&format!("  only in product: {t}\n"));
                        }
                        s
                    },
                );
                Ok(check.holds())
            }
            Command::Skew { mu, n, base, export } => {
                let kind = base.kind().ok_or_else(geom_usage)?;
                self.guard(kind, mu.size() + n)?;
                let poset = if kind == OrderKind::Kl {
                    skew_order_poset(&self.cache, &mu, n, kind)?.poset
                } else {
                    fixed_inner_poset(&self.cache, &Tableau::superstandard(&mu), n, kind)?.poset
                };
                if let Some(format) = export {
                    self.export(&poset, format);
                    return Ok(true);
                }
                let mu_value = poset.mobius_bottom_top()?;
                self.emit(
                    json!({ "mu": mu.to_string(), "n": n, "base": kind.name(), "size": poset.len(), "mobius": mu_value }),
                    || format!("{} elements, mu(0, 1) = {mu_value}\n", poset.len()),
                );
                Ok(true)
            }
            Command::Verify { suite } => self.verify(suite),
        }
    }

    fn order_cmd(&self, args: &OrderArgs) -> Outcome {
        let Some(kind) = args.order.kind() else {
            return self.geom(args.n);
        };
        let tp = self.order(kind, args.n)?;
        if let Some(format) = args.export {
            self.export(tp.poset(), format);
            return Ok(true);
        }
        let covers = tp.poset().covers().len();
        let relations = tp.relation().len();
        self.emit(
            json!({ "order": kind.name(), "n": args.n, "elements": tp.len(), "covers": covers, "relations": relations }),
            || format!("{kind} order on SYT_{}: {} elements, {covers} covers, {relations} strict relations\n", args.n, tp.len()),
        );
        Ok(true)
    }

    fn geom(&self, n: usize) -> Outcome {
        let kl = self.order(OrderKind::Kl, n)?.relation().len();
        let chain = self.order(OrderKind::Chain, n)?.relation().len();
        self.emit(
            json!({ "order": "geom", "n": n, "notice": SandwichReport::GEOMETRIC_NOTICE, "lower": { "order": "kl", "relations": kl }, "upper": { "order": "chain", "relations": chain } }),
            || format!("{}\nlower bound kl: {kl} strict relations\nupper bound chain: {chain} strict relations\n", SandwichReport::GEOMETRIC_NOTICE),
        );
        Ok(true)
    }

    fn verify(&self, suite: Suite) -> Outcome {
        let cache = &self.cache;
        let mut checks = Vec::new();
        match suite {
            Suite::TheoremPr { order, n } => {
                for kind in Self::kinds(order)? {
                    for m in 2..=n {
                        self.guard(kind, m)?;
                        checks.push(verify::theorem_pr(cache, kind, m)?);
                    }
                }
            }
            Suite::MobiusTop { order, n } => {
                for kind in Self::kinds(order)? {
                    self.guard(kind, n)?;
                    checks.push(verify::mobius_top(cache, kind, n)?);
                }
            }
            Suite::SkewMobius { mu, n, base } => {
                let cases: Vec<(Partition, usize, OrderKind)> = match (mu, n) {
                    (Some(mu), Some(n)) => Self::kinds(base)?.into_iter().map(|k| (mu.clone(), n, k)).collect(),
                    (None, None) => default_skew_cases(),
                    _ => return Err(Failure::Usage("give both --mu and --n, or neither".into())),
                };
                for (mu, n, kind) in cases {
                    self.guard(kind, mu.size() + n)?;
                    let name = format!("skew mobius ({mu}) n={n} {kind}");
                    checks.push(match verify_skew_mobius(cache, &mu, n, kind) {
                        Ok(r) => Check::new(name, true, format!("mu = {}", r.mobius)),
                        Err(Error::MobiusMismatch { computed, expected }) => {
                            Check::new(name, false, format!("mu = {computed}, expected {expected}"))
                        }
                        Err(e) => return Err(e.into()),
                    });
                }
            }
            Suite::Sandwich { n } => {
                self.guard(OrderKind::Kl, n)?;
                checks = verify::sandwich(cache, n)?;
            }
            Suite::Morphisms { order, n } => {
                for kind in Self::kinds(order)? {
                    self.guard(kind, n)?;
                    checks.extend(verify::morphisms(cache, kind, n)?);
                }
            }
            Suite::Counterexamples => checks = verify::counterexamples(cache)?,
        }
        self.report(&checks)
    }
}

fn default_skew_cases() -> Vec<(Partition, usize, OrderKind)> {
    let p = |s: &str| s.parse::<Partition>().expect("literal partition");
    let mut cases: Vec<_> = [("1", 2), ("1", 3), ("2,2", 2), ("2,1", 2), ("2,1", 3)]
        .into_iter()
        .map(|(mu, n)| (p(mu), n, OrderKind::Weak))
        .collect();
    cases.push((p("2,2"), 2, OrderKind::Kl));
    cases.push((p("2,1"), 2, OrderKind::Kl));
    cases
}

fn geom_usage() -> Failure {
    Failure::Usage(format!(
        "geom is not computable here; {}",
        SandwichReport::GEOMETRIC_NOTICE
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let config = OrderConfig {
        allow_big: cli.allow_big,
        convention: match cli.kl_descent_convention {
            Convention::Left => ConventionChoice::Left,
            Convention::Right => ConventionChoice::Right,
            Convention::Auto => ConventionChoice::Auto,
        },
        kl_cache: cli.kl_cache,
    };
    let app = App { cache: OrderCache::new(config), allow_big: cli.allow_big, json: cli.json };
    match app.run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
