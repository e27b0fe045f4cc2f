package logx;

public class Logger {
    public void log(String m) {
    }

    public void warn(String m) {
        log(m);
    }

    public void error(String m) {
        log(m);
    }
}
