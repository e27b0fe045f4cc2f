package logx;

public class Logger {
    public void log(String m) {
    }

    public void warn(String m) {
        log(m);
    }
}
