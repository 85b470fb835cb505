//! `brouwer`: enumeration reports, conjugacy checks, braid utilities,
//! tangles, deflectors, realization recipes and diagram rendering.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict,
//! 2 usage or parse errors.

use brouwer_core::braid::{
    braid_equal, comb, factor_free_half_twists, factors_product, normal_form,
    BraidWord,
};
use brouwer_core::classify::{
    conjugate_equal, deflector, realize, CoupleFile, RecipeFile,
};
use brouwer_core::diagram::Diagram;
use brouwer_core::enumerate::{classify_all, enumerate_diagrams, DiagramRecord};
use brouwer_core::render::{render_ascii, render_dot, render_svg};
use brouwer_core::tangle::{tangle_of, Curve, MarkedCirclePair, McgWord, Tangle};
use brouwer_core::walls::{compute_walls, DiagramWithWalls};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "brouwer", version, about = "Conjugacy invariants of Brouwer mapping classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all canonical diagrams with the given orbit count.
    Enumerate {
        #[arg(long)]
        orbits: u32,
        /// Also compute walls and determinancy verdicts.
        #[arg(long)]
        classify: bool,
        /// Write the JSON-lines report to a file instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// JSON list of canonical diagram strings to flag as forbidden.
        #[arg(long)]
        annotations: Option<std::path::PathBuf>,
    },
    /// Decide conjugacy of two invariant couples (JSON files).
    Equal { couple_a: std::path::PathBuf, couple_b: std::path::PathBuf },
    /// Braid utilities: normal form, linking numbers, combing, factorization.
    Braid {
        #[command(subcommand)]
        sub: BraidCommand,
    },
    /// Tangle of a mapping class word, e.g. `S^2 T^-1`.
    Tangle { word: String },
    /// Deflector between two marked-circle families given by their
    /// separating curves, e.g. `--from 0/1 --to 2/1`.
    Deflector {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Produce a realization recipe for an invariant couple.
    Realize {
        couple: std::path::PathBuf,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Render a diagram with walls.
    Render {
        diagram: String,
        /// Wall list such as `(g0,g2;f1),(g3,g5;f2)`; computed when omitted.
        #[arg(long)]
        walls: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Garside left-normal form.
    Nf { word: String },
    /// Linking numbers of each strand around the last strand.
    Eps { word: String },
    /// Combing into layers of pure-braid letters.
    Comb { word: String },
    /// Factorization into half twists avoiding the last strand
    /// (requires trivial total linking).
    Factor { word: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate { orbits, classify, out, annotations } => {
            if !(1..=6).contains(&orbits) {
                return Err(format!("orbit count {} out of range 1..=6", orbits));
            }
            let forbidden: Vec<String> = match annotations {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("reading {}: {}", path.display(), e))?;
                    serde_json::from_str(&text).map_err(|e| format!("annotations: {}", e))?
                }
                None => Vec::new(),
            };
            let mut records = Vec::new();
            if classify {
                for c in classify_all(orbits).map_err(|e| e.to_string())? {
                    records.push(DiagramRecord::classified(&c));
                }
            } else {
                for d in enumerate_diagrams(orbits).map_err(|e| e.to_string())? {
                    records.push(DiagramRecord::bare(&d));
                }
            }
            for rec in records.iter_mut() {
                if forbidden.iter().any(|f| f == &rec.diagram) {
                    rec.forbidden = Some(true);
                }
            }
            let mut text = String::new();
            for rec in &records {
                text.push_str(&serde_json::to_string(rec).map_err(|e| e.to_string())?);
                text.push('\n');
            }
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("writing {}: {}", path.display(), e))?,
                None => print!("{}", text),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equal { couple_a, couple_b } => {
            let a = read_couple(&couple_a)?;
            let b = read_couple(&couple_b)?;
            if conjugate_equal(&a, &b) {
                println!("conjugate");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not-conjugate");
                Ok(ExitCode::from(1))
            }
        }
        Command::Braid { sub } => run_braid(sub),
        Command::Tangle { word } => {
            let word: McgWord = word.parse().map_err(|e| format!("{}", e))?;
            println!("{}", tangle_of(&word));
            Ok(ExitCode::SUCCESS)
        }
        Command::Deflector { from, to } => {
            let alphas = MarkedCirclePair::new(parse_curve(&from)?).map_err(|e| e.to_string())?;
            let betas = MarkedCirclePair::new(parse_curve(&to)?).map_err(|e| e.to_string())?;
            let lifts = deflector(&alphas, &betas).map_err(|e| e.to_string())?;
            let out = std::io::stdout();
            let mut out = out.lock();
            for (f, domain) in &lifts {
                let line = serde_json::json!({
                    "conjugator": f.conjugator,
                    "core": f.core,
                    "sign": f.sign,
                    "support": [f.support.0, f.support.1],
                    "domain": domain,
                });
                writeln!(out, "{}", line).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Realize { couple, out } => {
            let c = read_couple(&couple)?;
            let rec = realize(&c).map_err(|e| e.to_string())?;
            let text = serde_json::to_string_pretty(&RecipeFile::from_recipe(&rec))
                .map_err(|e| e.to_string())?;
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("writing {}: {}", path.display(), e))?,
                None => println!("{}", text),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { diagram, walls, format } => {
            let d: Diagram = diagram.parse().map_err(|e| format!("{}", e))?;
            let dw = match walls {
                Some(text) => DiagramWithWalls::parse(d, &text).map_err(|e| e.to_string())?,
                None => compute_walls(&d),
            };
            let text = match format {
                Format::Ascii => render_ascii(&dw),
                Format::Dot => render_dot(&dw),
                Format::Svg => render_svg(&dw),
            };
            print!("{}", text);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_braid(sub: BraidCommand) -> Result<ExitCode, String> {
    match sub {
        BraidCommand::Nf { word } => {
            let b: BraidWord = word.parse().map_err(|e| format!("{}", e))?;
            let nf = normal_form(&b);
            if nf.is_identity() {
                println!("identity");
            } else {
                println!("{}", nf);
            }
            Ok(ExitCode::SUCCESS)
        }
        BraidCommand::Eps { word } => {
            let b: BraidWord = word.parse().map_err(|e| format!("{}", e))?;
            let mut parts = Vec::new();
            for i in 1..b.strands {
                parts.push(format!("eps_{}={}", i, b.epsilon_i(i).map_err(|e| e.to_string())?));
            }
            let total = b.epsilon_total().map_err(|e| e.to_string())?;
            println!("{} total={}", parts.join(" "), total);
            Ok(ExitCode::SUCCESS)
        }
        BraidCommand::Comb { word } => {
            let b: BraidWord = word.parse().map_err(|e| format!("{}", e))?;
            let combed = comb(&b).map_err(|e| e.to_string())?;
            let check = braid_equal(&combed.to_braid_word(), &b).map_err(|e| e.to_string())?;
            debug_assert!(check);
            for (idx, layer) in combed.layers.iter().enumerate() {
                let k = idx + 2;
                let letters: Vec<String> = layer
                    .iter()
                    .map(|&(j, e)| {
                        if e >= 0 {
                            format!("A({},{})", j, k)
                        } else {
                            format!("A({},{})^-1", j, k)
                        }
                    })
                    .collect();
                println!("beta_{}: {}", k, if letters.is_empty() { "1".into() } else { letters.join(" ") });
            }
            Ok(ExitCode::SUCCESS)
        }
        BraidCommand::Factor { word } => {
            let b: BraidWord = word.parse().map_err(|e| format!("{}", e))?;
            if !b.is_pure() {
                return Err("factorization requires a pure braid".into());
            }
            let total = b.epsilon_total().map_err(|e| e.to_string())?;
            if total != 0 {
                return Err(format!(
                    "the total linking number of the word must be trivial (got {})",
                    total
                ));
            }
            let (factors, twist) = factor_free_half_twists(&b).map_err(|e| e.to_string())?;
            debug_assert_eq!(twist, 0);
            debug_assert!(braid_equal(&factors_product(&factors, b.strands), &b).unwrap());
            let out = std::io::stdout();
            let mut out = out.lock();
            for f in &factors {
                let line = serde_json::json!({
                    "conjugator": f.conjugator,
                    "core": f.core,
                    "sign": f.sign,
                    "support": [f.support.0, f.support.1],
                });
                writeln!(out, "{}", line).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_couple(path: &std::path::Path) -> Result<brouwer_core::classify::InvariantCouple, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("reading {}: {}", path.display(), e))?;
    let file: CoupleFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
    file.to_couple().map_err(|e| e.to_string())
}

fn parse_curve(text: &str) -> Result<Curve, String> {
    // Accept `p/q` or the tangle notation `p/q@partition`.
    let body = text.trim().trim_start_matches("tangle=");
    if body == "trivial" {
        return Ok(Curve::standard());
    }
    if body.contains('@') {
        let t: Tangle = body.parse().map_err(|e| format!("{}", e))?;
        return Ok(t.representative);
    }
    let (ps, qs) = body.split_once('/').ok_or("expected `p/q`")?;
    let p: i64 = ps.trim().parse().map_err(|_| "bad numerator".to_string())?;
    let q: i64 = qs.trim().parse().map_err(|_| "bad denominator".to_string())?;
    brouwer_core::tangle::Curve::from_slope(p, q).map_err(|e| e.to_string())
}
