# setup.py
import os
import subprocess
import sys


def ensure_package_installed(package_name):
    """
    Ensures a package is installed. Installs it if not present.
    """
    try:
        __import__(package_name)
    except ImportError:
        print(f"✘ Package {package_name} not found. Installing...")
        subprocess.check_call([sys.executable, "-m", "pip", "install", package_name])


# The installer itself reports progress with these two
for package in ["tqdm", "colorama"]:
    ensure_package_installed(package)

from colorama import Back, Fore, Style, init
from tqdm import tqdm


def install_requirements():
    """
    Install dependencies from requirements.txt with a single progress bar.
    """
    init(autoreset=True)

    print(Back.BLUE + Fore.WHITE + Style.BRIGHT + "\n  Installing spinorlab dependencies  \n")
    print(Fore.CYAN + Style.BRIGHT + "-" * 50 + "\n")

    requirements_file = "requirements.txt"
    if not os.path.exists(requirements_file):
        print(Fore.RED + "✘ requirements.txt not found!")
        return False

    with open(requirements_file, "r") as file:
        requirements = [line.strip() for line in file if line.strip() and not line.startswith("#")]

    failed = []
    with tqdm(
        total=len(requirements),
        desc="Installing packages",
        bar_format="{desc}: {percentage:3.0f}%|{bar:30}| {n_fmt}/{total_fmt}",
        colour="green",
        position=0,
        leave=True,
    ) as pbar:
        print_status = lambda msg: print(f"\033[K{msg}", end="\r")

        for package in requirements:
            try:
                result = subprocess.run(
                    [sys.executable, "-m", "pip", "install", package],
                    stdout=subprocess.PIPE,
                    stderr=subprocess.PIPE,
                    text=True,
                )
                if "already satisfied" in result.stdout:
                    print_status(Fore.YELLOW + f"✔ Already installed: {package}")
                elif result.returncode == 0:
                    print_status(Fore.GREEN + f"✔ Installed: {package}")
                else:
                    failed.append(package)
                    print_status(Fore.RED + f"✘ Error installing {package}: {result.stderr.strip()}")
            except Exception as e:
                failed.append(package)
                print_status(Fore.RED + f"✘ Failed to process {package}: {str(e)}")
            pbar.update(1)

    print("\n" + Fore.CYAN + Style.BRIGHT + "-" * 50)
    if failed:
        print(Back.RED + Fore.WHITE + Style.BRIGHT + f"  Failed: {', '.join(failed)}  ")
    else:
        print(Back.GREEN + Fore.WHITE + Style.BRIGHT + "  Dependency Installation Complete!  ")
    print(Fore.CYAN + Style.BRIGHT + "-" * 50 + "\n")
    return not failed


def check_exact_backend():
    """
    Report whether sympy picked up gmpy2 for its rational ground types.
    """
    init(autoreset=True)
    try:
        from sympy.external.gmpy import GROUND_TYPES
    except ImportError as e:
        print(Fore.RED + f"✘ sympy is not importable: {e}")
        return False
    if GROUND_TYPES == "gmpy":
        print(Fore.GREEN + "✔ sympy uses gmpy2 ground types")
    else:
        print(Fore.YELLOW + f"✔ sympy uses {GROUND_TYPES} ground types (slower, still exact)")
    return True


def run_setuptools():
    """
    Package metadata for pip / build backends (`pip install -e .`).
    """
    from setuptools import find_namespace_packages, setup

    setup(
        name="spinorlab",
        version="0.1.0",
        packages=find_namespace_packages(include=["src", "src.*"]),
        python_requires=">=3.10",
        install_requires=[
            "sympy",
            "pandas",
            "pyyaml",
            "loguru",
            "tqdm",
            "colorama",
            "pydantic",
            "python-dotenv",
        ],
    )


if __name__ == "__main__" and len(sys.argv) > 1:
    # Invoked with a command (egg_info, bdist_wheel, editable_wheel, ...) by a build backend
    run_setuptools()
elif __name__ == "__main__":
    try:
        ok = install_requirements()
        ok = check_exact_backend() and ok
        sys.exit(0 if ok else 1)
    except Exception as e:
        print(Fore.RED + f"✘ Setup failed: {str(e)}")
        sys.exit(1)

# python setup.py
