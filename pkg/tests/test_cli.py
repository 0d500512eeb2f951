import io
import json
import pytest
import dupy as dp


def run(*argv):
    stream = io.StringIO()
    code = dp.run_command(list(argv), stream)
    return code, stream.getvalue()


def run_json(*argv):
    code, out = run(*argv, '--json')
    return code, json.loads(out)


@pytest.fixture()
def spec_file(tmp_path):
    def write(text):
        path = tmp_path / 'spec.toml'
        path.write_text(text)
        return str(path)
    return write


def test_normalize():
    code, out = run('normalize', '--spec', 'example:unipotent', '--expr',
                    "d^2*u - 2*d*u*d + u*d^2 - t1*d")
    assert code == 0
    assert out.strip() == '0'


def test_normalize_strategy():
    argv = ('normalize', '--spec', 'example:generic', '--expr', "d^2*u^2")
    leftmost = run_json(*argv)
    rightmost = run_json(*argv, '--strategy', 'rightmost')
    assert leftmost[0] == rightmost[0] == 0
    assert leftmost[1]['element'] == rightmost[1]['element']


@pytest.mark.parametrize("expr,code", [("t1", 0), ("u", 1), ("d*u", 1)])
def test_central(expr, code):
    assert run('central', '--spec', 'example:generic',
               '--expr', expr)[0] == code


def test_normal_check():
    code, out = run('normal-check', '--spec', 'example:generic',
                    '--expr', 'H')
    assert code == 0
    assert out.startswith('true')
    assert run('normal-check', '--spec', 'example:generic',
               '--expr', 'u')[0] == 1


def test_iso_json():
    code, document = run_json('iso', '--spec1', 'example:generic',
                              '--spec2', 'example:swapped')
    assert code == 0
    assert document['schema'] == 'dua/1'
    assert document['command'] == 'iso'
    assert document['case'] == '3b'
    assert document['isomorphic']


def test_not_isomorphic():
    assert run('iso', '--spec1', 'example:generic',
               '--spec2', 'example:dependent')[0] == 1


def test_iso_undecided(spec_file):
    path = spec_file('n = 1\nr = 2\ns = 4\nphi = "t1"\n')
    assert run('iso', '--spec1', path, '--spec2', path)[0] == 3


def test_unsupported_field(spec_file):
    path = spec_file('n = 1\nr = "1 + zeta"\ns = 2\nphi = "t1"\n'
                     '[field]\nkind = "cyclotomic"\nm = 4\n')
    assert run('center-gens', '--spec', path)[0] == 3


@pytest.mark.parametrize(
        "argv",
        [(),
         ('normalize',),
         ('central', '--spec', 'example:generic'),
         ('normalize', '--spec', 'example:generic', '--expr', 'u +'),
         ('normalize', '--spec', 'example:irreducible', '--expr', 'H*K'),
         ('normalize', '--spec', 'example:nothing', '--expr', 'u'),
         ('specialize', '--spec', 'example:generic', '--lambda', '1,2'),
         ('gwa-check', '--spec', 'example:zero-divisor')])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_error_json():
    code, document = run_json('normalize', '--spec', 'example:generic',
                              '--expr', 'u + * d')
    assert code == 2
    assert document['error'] == 'ParseError'
    assert 'position 4' in document['message']


def test_missing_file(tmp_path):
    assert run('hk', '--spec', str(tmp_path / 'absent.toml'))[0] == 2


def test_aut_check():
    argv = ('aut-check', '--spec', 'example:generic')
    assert run(*argv, '--lambda', '2,3', '--affine', '6,0')[0] == 0
    code, document = run_json(*argv, '--lambda', '1,1', '--affine', '2,0')
    assert code == 1
    assert not document['valid']


def test_specialize():
    code, document = run_json('specialize', '--spec', 'example:generic',
                              '--lambda', '2', '--expr', 't1*u')
    assert code == 0
    assert document['text'] == '2*u'
    assert document['target']['n'] == 0


@pytest.mark.parametrize("command", ['hk', 'confluence', 'center-gens'])
def test_checks_on_generic(command):
    assert run(command, '--spec', 'example:generic')[0] == 0


def test_examples():
    code, document = run_json('examples')
    assert code == 0
    assert set(document['examples']) == set(dp.list_examples())


@pytest.mark.slow
def test_verify():
    code, document = run_json('verify')
    assert code == 0
    assert document['passed']
